#include "monlink/licci.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "monlink/serialize.hpp"
#include "monlink/simplicial.hpp"

namespace monlink {

namespace {

constexpr const char* kCiteNotCm =
    "licci ideals are Cohen-Macaulay (Peskine-Szpiro), and Cohen-Macaulayness of the "
    "localization at the homogeneous maximal ideal is that of S/I";
constexpr const char* kCiteCi = "complete intersections, principal ideals included, are licci";
constexpr const char* kCiteHeightTwo =
    "Cohen-Macaulay ideals of height at most two are licci (height one forces a principal "
    "ideal in a UFD; height two by Gaeta)";
constexpr const char* kCiteGorenstein = "Gorenstein ideals of height three are licci (Watanabe)";
constexpr const char* kCiteObstruction =
    "Huneke-Ulrich degree bound: a Cohen-Macaulay ideal with reg(S/I) <= (alpha-1) pd(S/I) - "
    "alpha is not licci";
constexpr const char* kCiteHu =
    "Huneke-Ulrich criterion: an Artinian monomial ideal is licci iff the iteration "
    "I -> (x_i^(a_i-b_i)) + K reaches the whole ring";
constexpr const char* kCiteBiCm =
    "a bi-Cohen-Macaulay squarefree ideal is licci iff its height is at most two or it is "
    "generated by variables";

std::string exponents_text(const std::vector<Exponent>& e) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
  out << ')';
  return out.str();
}

std::string form_summary(const StandardForm& form, const VariableSet& vars) {
  return "a=" + exponents_text(form.a) + " x^B=" + to_text(form.x_b(), vars) + " K=(" +
         to_text(form.k_ideal) + ")";
}

RuleFiring firing(std::string_view id, const char* citation, LicciStatus conclusion,
                  std::vector<std::pair<std::string, std::string>> witnesses) {
  return RuleFiring{std::string(id), citation, conclusion, std::move(witnesses)};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

struct Facts {
  BettiTable table;
  Invariants inv;
};

Facts compute_facts(const MonomialIdeal& ideal, const FieldSpec& field) {
  Facts facts{betti_table(ideal, field), {}};
  facts.inv = invariants(facts.table, ideal);
  return facts;
}

std::vector<std::pair<std::string, std::string>> basic_witnesses(const Invariants& inv) {
  return {{"pd", std::to_string(inv.pd)},
          {"height", std::to_string(inv.height)},
          {"reg", std::to_string(inv.reg)},
          {"alpha", std::to_string(inv.alpha)}};
}

// Rules evaluated in cascade order; each returns a firing when it applies.
std::vector<RuleFiring> evaluate_rules(const MonomialIdeal& ideal, const Facts& facts,
                                       const FieldSpec& field, bool stop_at_first) {
  const Invariants& inv = facts.inv;
  std::vector<RuleFiring> out;
  auto done = [&] { return stop_at_first && !out.empty(); };

  if (!inv.is_cm) {
    out.push_back(firing(kRuleNotCohenMacaulay, kCiteNotCm, LicciStatus::kNotLicci,
                         {{"pd", std::to_string(inv.pd)}, {"height", std::to_string(inv.height)}}));
  }
  if (done()) return out;
  if (ideal.is_principal() || is_complete_intersection(ideal)) {
    out.push_back(firing(kRuleCompleteIntersection, kCiteCi, LicciStatus::kLicci,
                         {{"generators", std::to_string(ideal.num_generators())},
                          {"principal", yes_no(ideal.is_principal())}}));
  }
  if (done()) return out;
  if (inv.is_cm && inv.height <= 2) {
    out.push_back(firing(kRuleHeightAtMostTwo, kCiteHeightTwo, LicciStatus::kLicci,
                         {{"height", std::to_string(inv.height)}, {"pd", std::to_string(inv.pd)}}));
  }
  if (done()) return out;
  if (inv.is_gorenstein && inv.height == 3) {
    out.push_back(firing(kRuleGorensteinHeightThree, kCiteGorenstein, LicciStatus::kLicci,
                         {{"height", "3"},
                          {"last_total_betti", std::to_string(facts.table.total(inv.pd))}}));
  }
  if (done()) return out;
  if (inv.is_cm && obstruction_not_licci(ideal, inv)) {
    auto w = basic_witnesses(inv);
    w.emplace_back("bound", std::to_string((static_cast<int>(inv.alpha) - 1) * inv.pd -
                                           static_cast<int>(inv.alpha)));
    out.push_back(firing(kRuleDegreeObstruction, kCiteObstruction, LicciStatus::kNotLicci,
                         std::move(w)));
  }
  if (done()) return out;
  if (is_artinian(ideal)) {
    const LicciVerdict hu = hu_decide(ideal);
    out.push_back(firing(kRuleHunekeUlrich, kCiteHu, hu.status,
                         {{"steps", std::to_string(hu.hu_trace->size())}}));
  }
  if (done()) return out;
  if (ideal.is_squarefree() && inv.is_cm) {
    const MonomialIdeal dual = alexander_dual(ideal);
    const Invariants dual_inv = invariants(betti_table(dual, field), dual);
    if (dual_inv.is_cm) {
      const bool by_variables = inv.alpha == 1;
      const bool licci = inv.height <= 2 || by_variables;
      out.push_back(firing(kRuleBiCohenMacaulay, kCiteBiCm,
                           licci ? LicciStatus::kLicci : LicciStatus::kNotLicci,
                           {{"height", std::to_string(inv.height)},
                            {"generated_by_variables", yes_no(by_variables)}}));
    }
  }
  return out;
}

}  // namespace

std::string to_string(LicciStatus status) {
  switch (status) {
    case LicciStatus::kLicci:
      return "Licci";
    case LicciStatus::kNotLicci:
      return "NotLicci";
    case LicciStatus::kUnknown:
      break;
  }
  return "Unknown";
}

LicciStatus parse_licci_status(std::string_view text) {
  if (text == "Licci") return LicciStatus::kLicci;
  if (text == "NotLicci") return LicciStatus::kNotLicci;
  if (text == "Unknown") return LicciStatus::kUnknown;
  throw std::invalid_argument("unknown licci status '" + std::string(text) + "'");
}

HuStep hu_step(const MonomialIdeal& ideal) {
  const StandardForm form = standard_form(ideal);  // validates Artinian and proper
  const VariableSet& vars = ideal.vars();
  HuStep step;
  if (form.sharp.is_zero()) {
    step.kind = HuStep::Kind::kUnit;
    step.next = MonomialIdeal::unit(vars);
    step.summary = "complete intersection";
    return step;
  }
  if (form.x_b().is_one()) {
    step.kind = HuStep::Kind::kFixpoint;
    step.next = ideal;
    step.summary = "fixpoint: gcd of sharp part is 1";
    return step;
  }
  // With K = (1) the step stops at (x_i^{a_i - b_i}), the complete
  // intersection directly linked to I, so the next step reaches S.
  std::vector<Monomial> gens;
  if (!form.k_ideal.is_unit()) gens = form.k_ideal.generators();
  for (std::size_t i = 0; i < form.a.size(); ++i) {
    gens.push_back(Monomial::variable(vars.size(), i, form.a[i] - form.b[i]));
  }
  step.kind = HuStep::Kind::kNext;
  step.next = MonomialIdeal(vars, std::move(gens));
  step.summary = form_summary(form, vars);
  return step;
}

LicciVerdict hu_decide(const MonomialIdeal& ideal) {
  LicciVerdict verdict;
  std::vector<HuTraceEntry> trace;
  MonomialIdeal current = ideal;
  auto pure_power_sum = [](const MonomialIdeal& i) {
    const auto a = standard_form(i).a;
    return std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  };
  std::uint64_t previous_sum = pure_power_sum(current);
  for (std::size_t k = 1;; ++k) {
    HuStep step = hu_step(current);
    trace.push_back({k, step.next, step.summary});
    if (step.kind == HuStep::Kind::kUnit) {
      verdict.status = LicciStatus::kLicci;
      break;
    }
    if (step.kind == HuStep::Kind::kFixpoint) {
      verdict.status = LicciStatus::kNotLicci;
      break;
    }
    current = std::move(step.next);
    const std::uint64_t sum = pure_power_sum(current);
    if (sum >= previous_sum) throw std::logic_error("Huneke-Ulrich iteration failed to descend");
    previous_sum = sum;
  }
  verdict.rules.push_back(firing(kRuleHunekeUlrich, kCiteHu, verdict.status,
                                 {{"steps", std::to_string(trace.size())}}));
  verdict.hu_trace = std::move(trace);
  return verdict;
}

bool obstruction_not_licci(const MonomialIdeal& ideal, const Invariants& inv) {
  (void)ideal;
  if (!inv.is_cm) throw std::invalid_argument("the degree obstruction needs a Cohen-Macaulay ideal");
  const int a = static_cast<int>(inv.alpha);
  return inv.reg <= (a - 1) * inv.pd - a;
}

LicciVerdict classify(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw std::invalid_argument("licci classification needs a proper nonzero ideal");
  }
  const Facts facts = compute_facts(ideal, field);
  std::vector<RuleFiring> firings = evaluate_rules(ideal, facts, field, true);
  LicciVerdict verdict;
  if (firings.empty()) return verdict;
  verdict.status = firings.front().conclusion;
  if (firings.front().id == kRuleHunekeUlrich) {
    LicciVerdict hu = hu_decide(ideal);
    verdict.hu_trace = std::move(hu.hu_trace);
  }
  verdict.rules = std::move(firings);
  return verdict;
}

std::vector<RuleFiring> audit(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw std::invalid_argument("licci classification needs a proper nonzero ideal");
  }
  return evaluate_rules(ideal, compute_facts(ideal, field), field, false);
}

bool audit_consistent(const std::vector<RuleFiring>& firings) {
  std::optional<LicciStatus> decided;
  for (const auto& f : firings) {
    if (f.conclusion == LicciStatus::kUnknown) continue;
    if (decided && *decided != f.conclusion) return false;
    decided = f.conclusion;
  }
  return true;
}

bool licci_bound_check(const MonomialIdeal& ideal, const LicciVerdict& verdict) {
  if (verdict.status != LicciStatus::kLicci) return true;
  if (!ideal.is_squarefree()) throw std::invalid_argument("the height bound needs a squarefree ideal");
  return height(ideal) <= ideal.num_vars() / alpha(ideal) + 1;
}

}  // namespace monlink
