#include "monlink/harness.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "monlink/betti.hpp"
#include "monlink/licci.hpp"
#include "monlink/linkage.hpp"
#include "monlink/polarization.hpp"
#include "monlink/serialize.hpp"
#include "monlink/simplicial.hpp"

namespace monlink {

bool TaskOutcome::expect(bool ok, const std::string& what) {
  if (!ok) {
    passed = false;
    failures.push_back(what);
  }
  return ok;
}

bool HarnessSummary::passed() const {
  return std::all_of(results.begin(), results.end(), [](const TaskResult& r) { return r.outcome.passed; });
}

namespace corpus {

std::vector<Graph> labeled_graphs_without_isolated(std::size_t n) {
  std::vector<Graph::Edge> slots;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  if (slots.size() >= 63) throw std::invalid_argument("too many vertices to enumerate");
  std::vector<Graph> out;
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::uint64_t covered = 0;
    std::vector<Graph::Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1) {
        edges.push_back(slots[s]);
        covered |= std::uint64_t{1} << slots[s].first | std::uint64_t{1} << slots[s].second;
      }
    }
    if (n > 0 && covered != (std::uint64_t{1} << n) - 1) continue;
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<NamedGraph> suspension_graphs() {
  std::vector<NamedGraph> out{
      {"K3", Graph::complete(3)},
      {"P3", Graph::path(3)},
      {"C4", Graph::cycle(4)},
      {"2K2", Graph(4, {{0, 1}, {2, 3}})},
  };
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::size_t m = 0; m <= 2; ++m) {
      out.push_back({"K1," + std::to_string(k) + "+" + std::to_string(m) + "K1", Graph::star(k, m)});
    }
  }
  return out;
}

std::vector<MonomialIdeal> random_squarefree(std::uint64_t seed, std::size_t count, std::size_t max_vars) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    const std::size_t n = 1 + rng() % max_vars;
    const std::size_t gens = 1 + rng() % (n + 2);
    std::vector<Monomial> ms;
    for (std::size_t g = 0; g < gens; ++g) {
      const std::uint64_t mask = 1 + rng() % ((std::uint64_t{1} << n) - 1);
      ms.push_back(Monomial::from_mask(n, mask));
    }
    out.emplace_back(VariableSet::indexed("x", n), std::move(ms));
  }
  return out;
}

std::vector<MonomialIdeal> random_monomial(std::uint64_t seed, std::size_t count, std::size_t max_vars,
                                           std::size_t max_gens, Exponent max_exponent) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    const std::size_t n = 1 + rng() % max_vars;
    const std::size_t gens = 1 + rng() % max_gens;
    std::vector<Monomial> ms;
    for (std::size_t g = 0; g < gens; ++g) {
      std::vector<Exponent> e(n);
      for (auto& x : e) x = static_cast<Exponent>(rng() % (max_exponent + 1));
      Monomial m(std::move(e));
      if (!m.is_one()) ms.push_back(std::move(m));
    }
    if (ms.empty()) continue;
    out.emplace_back(VariableSet::indexed("x", n), std::move(ms));
  }
  return out;
}

std::vector<MonomialIdeal> random_artinian(std::uint64_t seed, std::size_t count, std::size_t max_vars) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  while (out.size() < count) {
    const std::size_t n = 1 + rng() % max_vars;
    std::vector<Exponent> a(n);
    for (auto& x : a) x = static_cast<Exponent>(1 + rng() % 4);
    std::vector<Monomial> ms;
    for (std::size_t i = 0; i < n; ++i) ms.push_back(Monomial::variable(n, i, a[i]));
    const std::size_t extras = rng() % 5;
    for (std::size_t g = 0; g < extras; ++g) {
      std::vector<Exponent> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<Exponent>(rng() % a[i]);
      Monomial m(std::move(e));
      if (!m.is_one()) ms.push_back(std::move(m));
    }
    out.emplace_back(VariableSet::indexed("x", n), std::move(ms));
  }
  return out;
}

}  // namespace corpus

namespace {

const FieldSpec kQ = FieldSpec::rationals();

std::string key_of(const MonomialIdeal& ideal) {
  return std::to_string(ideal.num_vars()) + "|" + to_text(ideal);
}

// Verdicts are reused across tasks; T13 revisits every squarefree corpus.
const LicciVerdict& cached_classify(const MonomialIdeal& ideal) {
  static std::mutex mutex;
  static std::map<std::string, LicciVerdict> cache;
  const std::string key = key_of(ideal);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  LicciVerdict verdict = classify(ideal, kQ);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(verdict)).first->second;
}

Invariants invariants_of(const MonomialIdeal& ideal, const FieldSpec& field = kQ) {
  return invariants(betti_table(ideal, field), ideal);
}

std::string show(const MonomialIdeal& ideal) { return "(" + to_text(ideal) + ")"; }

std::string show(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.num_vertices() << " E={";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out << (first ? "" : ",") << u + 1 << "-" << v + 1;
    first = false;
  }
  out << "}";
  return out.str();
}

MonomialIdeal cycle_path_ideal(std::size_t n, std::size_t t) {
  if (n == 2) {
    // C_2 is not simple; its only 2-path is x1 x2.
    const std::size_t both[] = {0, 1};
    return MonomialIdeal(VariableSet::indexed("x", 2), {Monomial::squarefree(2, both)});
  }
  return t_path_ideal(Graph::cycle(n), t);
}

struct CycleFormula {
  int pd;
  int reg;
};

CycleFormula cycle_formula(int n, int t) {
  const int q = n / (t + 1);
  const int d = n % (t + 1);
  if (d == 0) return {2 * q, (t - 1) * q};
  return {2 * q + 1, (t - 1) * q + d - 1};
}

bool is_star(const Graph& g) { return classify(g).is_star_plus_isolated; }

// ---------------------------------------------------------------- tasks

TaskOutcome t1_hu_example(std::uint64_t) {
  TaskOutcome out;
  const auto vars = VariableSet::indexed("x", 3);
  const MonomialIdeal ideal = parse_ideal_text("x1^2, x2^2, x3^2, x1*x2, x2*x3", vars);
  const LicciVerdict v = classify(ideal);
  out.expect(v.status == LicciStatus::kLicci, "status " + to_string(v.status));
  out.expect(!v.rules.empty() && v.rules.front().id == kRuleHunekeUlrich, "decided by the Huneke-Ulrich rule");
  if (out.expect(v.hu_trace && v.hu_trace->size() == 2, "trace of length 2")) {
    const auto& trace = *v.hu_trace;
    out.expect(trace[0].ideal == MonomialIdeal::maximal(vars), "I^{1} = (x1, x2, x3), got " + show(trace[0].ideal));
    out.expect(trace[1].ideal.is_unit(), "I^{2} = S");
    out.expect(trace[1].summary == "complete intersection", "trace ends at a complete intersection");
    for (const auto& e : trace) out.notes.push_back("I^{" + std::to_string(e.k) + "} = " + show(e.ideal) + "  [" + e.summary + "]");
  }
  // A single sharp generator: (x^2, y^2, xy) has K = (1).
  const MonomialIdeal single = parse_ideal_text("x^2, y^2, x*y");
  const LicciVerdict s = hu_decide(single);
  std::string trace_text;
  for (const auto& e : *s.hu_trace) trace_text += " I^{" + std::to_string(e.k) + "} = " + show(e.ideal) + ";";
  out.notes.push_back("(x^2, y^2, xy): " + to_string(s.status) + "," + trace_text);
  out.expect(s.status == LicciStatus::kLicci, "(x^2, y^2, xy) is licci");
  out.expect(s.hu_trace->front().ideal == MonomialIdeal::maximal(single.vars()), "(x^2, y^2, xy) links to (x, y)");
  return out;
}

TaskOutcome t2_cycle_invariants(std::uint64_t) {
  TaskOutcome out;
  const FieldSpec f2 = FieldSpec::prime(2);
  for (int t = 2; t <= 4; ++t) {
    for (int n = t; n <= 10; ++n) {
      const MonomialIdeal ideal = cycle_path_ideal(n, t);
      const BettiTable table = betti_table(ideal, kQ);
      const CycleFormula expected = cycle_formula(n, t);
      const std::string tag = "P_" + std::to_string(t) + "(C_" + std::to_string(n) + ")";
      out.expect(table.projective_dimension() == expected.pd,
                 tag + ": pd " + std::to_string(table.projective_dimension()) + " vs " + std::to_string(expected.pd));
      out.expect(table.regularity() == expected.reg,
                 tag + ": reg " + std::to_string(table.regularity()) + " vs " + std::to_string(expected.reg));
      if (betti_table(ideal, f2) != table) out.notes.push_back(tag + ": Betti table differs over GF(2)");
    }
  }
  out.notes.push_back("grid t in {2,3,4}, t <= n <= 10");
  return out;
}

TaskOutcome t3_cycle_licci(std::uint64_t) {
  TaskOutcome out;
  for (int t = 2; t <= 4; ++t) {
    for (int n = t; n <= 10; ++n) {
      const MonomialIdeal ideal = cycle_path_ideal(n, t);
      const LicciVerdict& v = cached_classify(ideal);
      const bool licci = n == t || n == t + 1 || n == 2 * t + 1;
      const std::string tag = "P_" + std::to_string(t) + "(C_" + std::to_string(n) + ")";
      out.expect(v.status == (licci ? LicciStatus::kLicci : LicciStatus::kNotLicci),
                 tag + ": " + to_string(v.status));
      if (n == 2 * t + 1) {
        out.expect(!v.rules.empty() && v.rules.front().id == kRuleGorensteinHeightThree,
                   tag + ": certified by the Gorenstein height-three rule");
      }
      if (!v.rules.empty()) out.notes.push_back(tag + ": " + to_string(v.status) + " by " + v.rules.front().id);
    }
  }
  return out;
}

TaskOutcome t4_cycle_gorenstein(std::uint64_t) {
  TaskOutcome out;
  for (int t = 2; t <= 6; ++t) {
    const int n = 2 * t + 1;
    const MonomialIdeal ideal = cycle_path_ideal(n, t);
    const BettiTable table = betti_table(ideal);
    const Invariants inv = invariants(table, ideal);
    const std::string tag = "P_" + std::to_string(t) + "(C_" + std::to_string(n) + ")";
    out.expect(inv.height == 3, tag + ": height " + std::to_string(inv.height));
    out.expect(inv.pd == 3, tag + ": pd " + std::to_string(inv.pd));
    out.expect(table.total(3) == 1, tag + ": total beta_3 " + std::to_string(table.total(3)));
    out.expect(inv.is_gorenstein, tag + ": Gorenstein");
  }
  return out;
}

TaskOutcome t5_complementary_cm(std::uint64_t) {
  TaskOutcome out;
  for (std::size_t n = 3; n <= 6; ++n) {
    std::size_t count = 0, cm = 0;
    for (const Graph& g : corpus::labeled_graphs_without_isolated(n)) {
      const GraphClass c = classify(g);
      const Invariants inv = invariants_of(complementary_edge_ideal(g));
      out.expect(inv.is_cm == (c.is_complete || c.is_forest), "I_c(" + show(g) + "): CM " + (inv.is_cm ? "yes" : "no"));
      ++count;
      cm += inv.is_cm;
    }
    out.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(count) + " graphs, " + std::to_string(cm) + " CM");
  }
  return out;
}

TaskOutcome t6_complementary_licci(std::uint64_t) {
  TaskOutcome out;
  for (std::size_t n = 3; n <= 6; ++n) {
    std::size_t licci = 0;
    for (const Graph& g : corpus::labeled_graphs_without_isolated(n)) {
      const GraphClass c = classify(g);
      const MonomialIdeal ideal = complementary_edge_ideal(g);
      const LicciVerdict& v = cached_classify(ideal);
      const bool expected = (c.is_complete && n == 3) || c.is_forest;
      out.expect(v.status == (expected ? LicciStatus::kLicci : LicciStatus::kNotLicci),
                 "I_c(" + show(g) + "): " + to_string(v.status));
      licci += v.status == LicciStatus::kLicci;
      if (c.is_forest && !c.is_complete) {
        out.expect(height(ideal) == 2, "I_c(" + show(g) + "): forest height " + std::to_string(height(ideal)));
      }
      if (c.is_complete && n >= 4) {
        out.expect(height(ideal) == 3, "I_c(K_" + std::to_string(n) + "): height " + std::to_string(height(ideal)));
      }
    }
    out.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(licci) + " licci");
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const Graph& g : corpus::labeled_graphs_without_isolated(n)) {
      const auto firings = audit(complementary_edge_ideal(g));
      out.expect(audit_consistent(firings), "I_c(" + show(g) + "): rules disagree");
    }
  }
  return out;
}

TaskOutcome t7_complementary_linear(std::uint64_t) {
  TaskOutcome out;
  for (std::size_t n = 4; n <= 6; ++n) {
    const MonomialIdeal ideal = complementary_edge_ideal(Graph::complete(n));
    const Invariants inv = invariants_of(ideal);
    const std::string tag = "I_c(K_" + std::to_string(n) + ")";
    out.expect(inv.has_linear_resolution, tag + ": linear resolution");
    out.expect(inv.height == 3, tag + ": height " + std::to_string(inv.height));
    out.expect(inv.is_cm, tag + ": Cohen-Macaulay");
    out.expect(obstruction_not_licci(ideal, inv), tag + ": degree obstruction");
  }
  return out;
}

TaskOutcome t8_suspension_reg(std::uint64_t) {
  TaskOutcome out;
  for (std::size_t t = 2; t <= 3; ++t) {
    for (const auto& [name, g] : corpus::suspension_graphs()) {
      const MonomialIdeal p = t_path_ideal(suspension(g, t), t);
      const int reg = betti_table(p).regularity();
      const int bound = static_cast<int>((t - 1) * g.num_vertices()) - static_cast<int>(t);
      const bool above = reg > bound;
      out.expect(above == is_star(g), name + ", t=" + std::to_string(t) + ": reg " + std::to_string(reg) +
                                          " vs (t-1)n-t = " + std::to_string(bound));
    }
  }
  return out;
}

TaskOutcome t9_suspension_licci(std::uint64_t) {
  TaskOutcome out;
  out.notes.push_back(
      "verdicts are for the depolarization in k[x_1..x_n]; transfer to the suspension ring assumes an infinite "
      "field (licci in T_n if and only if the depolarization is licci in R_m)");
  for (std::size_t t = 2; t <= 4; ++t) {
    for (const auto& [name, g] : corpus::suspension_graphs()) {
      const MonomialIdeal ideal = depolarize_suspension(g, t);
      const LicciVerdict v = hu_decide(ideal);
      const std::string tag = name + ", t=" + std::to_string(t);
      const bool star = is_star(g);
      const std::size_t edges = g.num_edges();
      if (!star) {
        out.expect(v.status == LicciStatus::kNotLicci, tag + ": " + to_string(v.status));
      } else if (t == 2 || edges <= 1) {
        out.expect(v.status == LicciStatus::kLicci, tag + ": " + to_string(v.status));
      } else if (t >= 4) {
        out.expect(v.status == LicciStatus::kNotLicci, tag + ": " + to_string(v.status));
      } else {
        std::string line = "probe " + tag + ": " + to_string(v.status) + ";";
        for (const auto& e : *v.hu_trace) {
          line += " I^{" + std::to_string(e.k) + "} = " + show(e.ideal) + " [" + e.summary + "];";
        }
        out.notes.push_back(line);
      }
    }
  }
  return out;
}

TaskOutcome t10_link_chain(std::uint64_t) {
  TaskOutcome out;
  const std::pair<std::size_t, std::size_t> grid[] = {{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}};
  for (const auto& [n, t] : grid) {
    const LinkReport report = verify_suspension_chain(n, t);
    const std::string tag = "(n,t)=(" + std::to_string(n) + "," + std::to_string(t) + ")";
    for (const auto& c : report.checks) out.expect(c.passed, tag + ": " + c.name);
    out.notes.push_back(tag + ": " + std::to_string(report.checks.size()) + " checks");
  }
  return out;
}

TaskOutcome t11_terai(std::uint64_t seed) {
  TaskOutcome out;
  for (const MonomialIdeal& ideal : corpus::random_squarefree(seed, 200, 7)) {
    const MonomialIdeal dual = alexander_dual(ideal);
    const std::string tag = show(ideal) + " in " + std::to_string(ideal.num_vars()) + " vars";
    out.expect(alexander_dual(dual) == ideal, tag + ": dual is not an involution");
    out.expect(alpha(dual) == height(ideal), tag + ": alpha(dual) != height");
    out.expect(height(dual) == alpha(ideal), tag + ": height(dual) != alpha");
    const int reg = betti_table(ideal).regularity();
    const int pd_dual = betti_table(dual).projective_dimension();
    out.expect(reg == pd_dual - 1, tag + ": reg " + std::to_string(reg) + ", pd of dual " + std::to_string(pd_dual));
  }
  out.notes.push_back("200 random squarefree ideals, n <= 7");
  return out;
}

TaskOutcome t12_bicm(std::uint64_t seed) {
  TaskOutcome out;
  std::vector<MonomialIdeal> ideals = corpus::random_squarefree(seed + 1, 200, 7);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<Monomial> vars;
      for (std::size_t i = 0; i < k; ++i) vars.push_back(Monomial::variable(n, i));
      ideals.emplace_back(VariableSet::indexed("x", n), std::move(vars));
    }
  }
  for (std::size_t n = 4; n <= 6; ++n) ideals.push_back(complementary_edge_ideal(Graph::complete(n)));
  for (std::size_t n = 3; n <= 6; ++n) ideals.push_back(complementary_edge_ideal(Graph::path(n)));
  for (std::size_t t = 2; t <= 4; ++t) ideals.push_back(cycle_path_ideal(t + 1, t));
  std::size_t bicm = 0, tall = 0;
  for (const MonomialIdeal& ideal : ideals) {
    const Invariants inv = invariants_of(ideal);
    if (!inv.is_cm) continue;
    const MonomialIdeal dual = alexander_dual(ideal);
    if (!invariants_of(dual).is_cm) continue;
    ++bicm;
    const bool expected = inv.height <= 2 || inv.alpha == 1;
    tall += inv.height >= 3 && inv.alpha > 1;
    const LicciVerdict& v = cached_classify(ideal);
    out.expect(v.status == (expected ? LicciStatus::kLicci : LicciStatus::kNotLicci),
               show(ideal) + ": " + to_string(v.status));
    out.expect(audit_consistent(audit(ideal)), show(ideal) + ": rules disagree");
  }
  out.expect(bicm > 0 && tall > 0, "corpus contains bi-CM ideals of height >= 3 not generated by variables");
  out.notes.push_back(std::to_string(bicm) + " bi-CM ideals, " + std::to_string(tall) +
                      " of height >= 3 not generated by variables");
  return out;
}

std::vector<MonomialIdeal> squarefree_corpus(std::uint64_t seed) {
  std::vector<MonomialIdeal> out;
  for (int t = 2; t <= 4; ++t) {
    for (int n = t; n <= 10; ++n) out.push_back(cycle_path_ideal(n, t));
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const Graph& g : corpus::labeled_graphs_without_isolated(n)) out.push_back(complementary_edge_ideal(g));
  }
  for (auto& i : corpus::random_squarefree(seed, 200, 7)) out.push_back(std::move(i));
  for (auto& i : corpus::random_squarefree(seed + 1, 200, 7)) out.push_back(std::move(i));
  for (std::size_t t = 2; t <= 4; ++t) {
    for (std::size_t n = t; n <= 2 * t + 2; ++n) out.push_back(t_path_ideal(Graph::path(n), t));
  }
  return out;
}

TaskOutcome t13_bound(std::uint64_t seed) {
  TaskOutcome out;
  std::size_t licci = 0;
  for (const MonomialIdeal& ideal : squarefree_corpus(seed)) {
    const LicciVerdict& v = cached_classify(ideal);
    if (v.status != LicciStatus::kLicci) continue;
    ++licci;
    out.expect(licci_bound_check(ideal, v), show(ideal) + ": height exceeds n/alpha + 1");
  }
  out.notes.push_back(std::to_string(licci) + " licci verdicts checked");
  return out;
}

TaskOutcome t14_tree_paths(std::uint64_t) {
  TaskOutcome out;
  for (std::size_t t = 2; t <= 4; ++t) {
    for (std::size_t n = t; n <= 2 * t + 2; ++n) {
      const MonomialIdeal ideal = t_path_ideal(Graph::path(n), t);
      const LicciVerdict& v = cached_classify(ideal);
      const std::string tag = "P_" + std::to_string(t) + "(path on " + std::to_string(n) + ")";
      if (n == t || n == 2 * t) {
        out.expect(v.status == LicciStatus::kLicci, tag + ": " + to_string(v.status));
      } else {
        out.expect(v.status != LicciStatus::kLicci, tag + ": " + to_string(v.status));
      }
      out.notes.push_back(tag + ": " + to_string(v.status) + (v.rules.empty() ? "" : " by " + v.rules.front().id));
    }
  }
  return out;
}

TaskOutcome t15_polarization(std::uint64_t seed) {
  TaskOutcome out;
  for (std::size_t t = 2; t <= 3; ++t) {
    for (const auto& [name, g] : corpus::suspension_graphs()) {
      const std::string tag = name + ", t=" + std::to_string(t);
      const MonomialIdeal p = t_path_ideal(suspension(g, t), t);
      const MonomialIdeal depol = depolarize_suspension(g, t);
      const BettiTable squarefree = betti_table(p);
      out.expect(betti_table(depol) == squarefree, tag + ": depolarized table differs");
      if (depol.num_generators() <= kTaylorGeneratorLimit) {
        out.expect(taylor_oracle(depol) == squarefree, tag + ": Taylor table of the depolarization differs");
      }
    }
  }
  std::size_t checked = 0;
  for (const MonomialIdeal& ideal : corpus::random_monomial(seed + 2, 100, 6, 6, 3)) {
    for (const FieldSpec& f : {kQ, FieldSpec::prime(2)}) {
      out.expect(betti_table(ideal, f) == taylor_oracle(ideal, f),
                 show(ideal) + " over " + f.to_string() + ": Hochster and Taylor disagree");
      ++checked;
    }
  }
  out.notes.push_back(std::to_string(checked) + " oracle comparisons");
  return out;
}

TaskOutcome t16_depol_artinian(std::uint64_t) {
  TaskOutcome out;
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Graph::Edge> slots;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Graph::Edge> edges;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask >> s & 1) edges.push_back(slots[s]);
      }
      const Graph g(n, edges);
      for (std::size_t t = 2; t <= 4; ++t) {
        const MonomialIdeal ideal = depolarize_suspension(g, t);
        for (std::size_t i = 0; i < n; ++i) {
          out.expect(ideal.contains(Monomial::variable(n, i, static_cast<Exponent>(t))),
                     show(g) + ", t=" + std::to_string(t) + ": x" + std::to_string(i + 1) + "^t missing");
        }
        out.expect(is_artinian(ideal), show(g) + ": not Artinian");
        ++count;
      }
    }
  }
  for (std::size_t t = 2; t <= 3; ++t) {
    for (const auto& [name, g] : corpus::suspension_graphs()) {
      const Invariants inv = invariants_of(t_path_ideal(suspension(g, t), t));
      out.expect(inv.is_cm, name + ", t=" + std::to_string(t) + ": P_t of the suspension is not CM");
    }
  }
  out.notes.push_back(std::to_string(count) + " depolarizations");
  return out;
}

TaskOutcome t17_socle_reg(std::uint64_t seed) {
  TaskOutcome out;
  std::vector<MonomialIdeal> ideals = corpus::random_artinian(seed + 3, 60, 4);
  for (std::size_t t = 2; t <= 4; ++t) {
    for (const auto& ng : corpus::suspension_graphs()) ideals.push_back(depolarize_suspension(ng.graph, t));
  }
  ideals.push_back(parse_ideal_text("x1^2, x2^2, x3^2, x1*x2, x2*x3"));
  for (const MonomialIdeal& ideal : ideals) {
    const unsigned socle = reg_artinian_socle(ideal);
    const int reg = betti_table(ideal).regularity();
    out.expect(static_cast<int>(socle) == reg,
               show(ideal) + ": socle degree " + std::to_string(socle) + ", reg " + std::to_string(reg));
  }
  out.notes.push_back(std::to_string(ideals.size()) + " Artinian ideals");
  return out;
}

TaskOutcome t18_cycle_obstruction(std::uint64_t) {
  TaskOutcome out;
  std::size_t cases = 0;
  for (int t = 2; t <= 12; ++t) {
    for (int n = t + 1; n <= 80; ++n) {
      if (n == t + 1 || n == 2 * t + 1) continue;
      const int q = n / (t + 1);
      const int d = n % (t + 1);
      const std::string tag = "t=" + std::to_string(t) + ", n=" + std::to_string(n);
      out.expect((t - 1) * q >= d, tag + ": (t-1)q < d");
      const CycleFormula f = cycle_formula(n, t);
      out.expect((t - 1) * f.pd - t >= f.reg, tag + ": obstruction inequality fails");
      ++cases;
    }
  }
  out.notes.push_back(std::to_string(cases) + " (t, n) pairs, 2 <= t <= 12, n <= 80");
  return out;
}

}  // namespace

const std::vector<HarnessTask>& harness_tasks() {
  static const std::vector<HarnessTask> tasks{
      {"T1", "hu-example", "Huneke-Ulrich iteration on (x1^2,x2^2,x3^2,x1x2,x2x3)",
       "Huneke-Ulrich criterion for Artinian monomial ideals, worked example", t1_hu_example},
      {"T2", "cycle-invariants", "pd and reg of P_t(C_n) for t in {2,3,4}, t <= n <= 10",
       "Alilooee-Faridi formulas for path ideals of cycles, n = (t+1)q + d", t2_cycle_invariants},
      {"T3", "cycle-licci", "P_t(C_n) licci iff n in {t, t+1, 2t+1}",
       "licci path ideals of cycles: n in {t+1, 2t+1}", t3_cycle_licci},
      {"T4", "cycle-gorenstein", "P_t(C_{2t+1}) Gorenstein of height 3",
       "Alilooee-Faridi: beta_3(S/P_t(C_n)) = 1 for n = 2t+1", t4_cycle_gorenstein},
      {"T5", "complementary-cm", "I_c(G) CM iff G complete or a forest, 3 <= n <= 6",
       "Ficarra-Moradi: complementary edge ideals are CM iff complete graph or a forest", t5_complementary_cm},
      {"T6", "complementary-licci", "I_c(G) licci iff G is a triangle or a forest",
       "licci complementary edge ideals: a triangle (K3) or a forest", t6_complementary_licci},
      {"T7", "complementary-linear", "I_c(K_n) has a linear resolution and height 3",
       "Ficarra-Moradi: I_c(K_n) has linear resolution", t7_complementary_linear},
      {"T8", "suspension-reg-dichotomy", "reg(T/P_t(suspension)) > (t-1)n - t iff star plus isolated vertices",
       "regularity dichotomy for suspensions: reg > (t-1)n - t", t8_suspension_reg},
      {"T9", "suspension-licci", "Huneke-Ulrich on depolarized suspension path ideals, with the t=3 probe",
       "licci path ideals of suspensions: star graph with possible isolated vertices", t9_suspension_licci},
      {"T10", "link-chain", "linkage ladder I_k ~ I_{k-2} for one edge plus isolated vertices",
       "linkage chain for suspensions of an edge: J : I = J' : I'", t10_link_chain},
      {"T11", "terai", "duality checks and Terai's formula on random squarefree ideals",
       "Terai: reg(S/I) = pd(S/I^dual) - 1", t11_terai},
      {"T12", "bicm", "bi-CM squarefree ideals: licci iff height <= 2 or generated by variables",
       "licci bi-Cohen-Macaulay ideals: height at most two or generated by variables", t12_bicm},
      {"T13", "bound", "licci squarefree ideals satisfy height <= floor(n/alpha) + 1",
       "height bound for licci squarefree ideals: floor(n/alpha) + 1", t13_bound},
      {"T14", "tree-corollary", "P_t of paths: licci iff the path has length t-1 or 2t-1",
       "licci path ideals of trees: path of length t-1 or 2t-1", t14_tree_paths},
      {"T15", "polarization-invariance", "Betti tables survive depolarization; Hochster agrees with Taylor",
       "polarization preserves graded Betti numbers (Herzog-Hibi)", t15_polarization},
      {"T16", "depol-artinian", "x_i^t lies in the depolarized suspension path ideal",
       "depolarized suspension path ideals are Artinian, suspension path ideals CM", t16_depol_artinian},
      {"T17", "socle-reg", "regularity of Artinian quotients equals the top socle degree",
       "Eisenbud: reg(S/I) is the maximal socle degree for Artinian I", t17_socle_reg},
      {"T18", "cycle-obstruction", "(t-1)q >= d away from n in {t+1, 2t+1}",
       "cycle obstruction arithmetic: (t-1)q >= d", t18_cycle_obstruction},
  };
  return tasks;
}

HarnessSummary verify_paper(const std::vector<std::string>& selection, std::uint64_t seed) {
  const auto& tasks = harness_tasks();
  std::set<std::string> wanted(selection.begin(), selection.end());
  for (const auto& id : wanted) {
    const bool known = std::any_of(tasks.begin(), tasks.end(), [&](const HarnessTask& t) { return t.id == id; });
    if (!known) throw std::invalid_argument("unknown task id '" + id + "'");
  }
  HarnessSummary summary;
  summary.seed = seed;
  for (const auto& task : tasks) {
    if (!wanted.empty() && !wanted.count(task.id)) continue;
    summary.results.push_back({task.id, task.name, task.citation, task.run(seed)});
  }
  return summary;
}

}  // namespace monlink
