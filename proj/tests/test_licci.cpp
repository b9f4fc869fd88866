#include <doctest.h>

#include "monlink/betti.hpp"
#include "monlink/graph.hpp"
#include "monlink/harness.hpp"
#include "monlink/licci.hpp"
#include "monlink/serialize.hpp"

using namespace monlink;

namespace {

MonomialIdeal I(const std::string& text, std::size_t n = 3) {
  return parse_ideal_text(text, VariableSet::indexed("x", n));
}

MonomialIdeal pure_powers(const VariableSet& vars, const std::vector<Exponent>& a) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < a.size(); ++i) gens.push_back(Monomial::variable(vars.size(), i, a[i]));
  return MonomialIdeal(vars, gens);
}

Invariants invariants_of(const MonomialIdeal& ideal) { return invariants(betti_table(ideal), ideal); }

}  // namespace

TEST_CASE("status names round trip") {
  for (auto s : {LicciStatus::kLicci, LicciStatus::kNotLicci, LicciStatus::kUnknown}) {
    CHECK(parse_licci_status(to_string(s)) == s);
  }
  CHECK_THROWS_AS(parse_licci_status("licci"), std::invalid_argument);
}

TEST_CASE("iteration on the three-variable example") {
  const MonomialIdeal ideal = I("x1^2, x2^2, x3^2, x1*x2, x2*x3");
  const LicciVerdict v = hu_decide(ideal);
  CHECK(v.status == LicciStatus::kLicci);
  REQUIRE(v.hu_trace);
  REQUIRE(v.hu_trace->size() == 2);
  CHECK(to_text((*v.hu_trace)[0].ideal) == "x1, x2, x3");
  CHECK((*v.hu_trace)[0].summary == "a=(2,2,2) x^B=x2 K=(x1, x3)");
  CHECK((*v.hu_trace)[1].ideal.is_unit());
  CHECK((*v.hu_trace)[1].summary == "complete intersection");
}

TEST_CASE("a single sharp generator steps to a complete intersection") {
  const MonomialIdeal ideal = I("x1^2, x2^2, x1*x2", 2);
  const HuStep step = hu_step(ideal);
  CHECK(step.kind == HuStep::Kind::kNext);
  CHECK(to_text(step.next) == "x1, x2");
  CHECK(hu_step(step.next).kind == HuStep::Kind::kUnit);
  CHECK(hu_decide(ideal).status == LicciStatus::kLicci);
}

TEST_CASE("sharp part with gcd one is a fixpoint") {
  // (x, y, z)^2: the sharp generators xy, xz, yz share no variable.
  const MonomialIdeal ideal = power(MonomialIdeal::maximal(VariableSet::indexed("x", 3)), 2);
  const HuStep step = hu_step(ideal);
  CHECK(step.kind == HuStep::Kind::kFixpoint);
  CHECK(step.next == ideal);
  const LicciVerdict v = hu_decide(ideal);
  CHECK(v.status == LicciStatus::kNotLicci);
  CHECK(v.hu_trace->size() == 1);
  CHECK_THROWS_AS(hu_step(I("x1, x2*x3")), std::invalid_argument);
}

TEST_CASE("one step is a double link through pure powers") {
  // I^{1} = (x^{a-b}) : ((x^a) : I) whenever K is proper. With K = (1) that
  // double link is S and the step stops one link early at (x^{a-b}).
  std::size_t moved = 0, unit_k = 0;
  for (const auto& ideal : corpus::random_artinian(71, 500, 4)) {
    const HuStep step = hu_step(ideal);
    if (step.kind != HuStep::Kind::kNext) continue;
    const StandardForm f = standard_form(ideal);
    std::vector<Exponent> ab(f.a.size());
    for (std::size_t i = 0; i < ab.size(); ++i) ab[i] = f.a[i] - f.b[i];
    const MonomialIdeal first = colon(pure_powers(ideal.vars(), f.a), ideal);
    const MonomialIdeal second = colon(pure_powers(ideal.vars(), ab), first);
    if (f.k_ideal.is_unit()) {
      CHECK(second.is_unit());
      CHECK(step.next == pure_powers(ideal.vars(), ab));
      ++unit_k;
    } else {
      CHECK(step.next == second);
      ++moved;
    }
  }
  CHECK(moved > 20);
  CHECK(unit_k > 0);
}

TEST_CASE("the iteration descends and ends") {
  for (const auto& ideal : corpus::random_artinian(72, 200, 4)) {
    const LicciVerdict v = hu_decide(ideal);
    REQUIRE(v.hu_trace);
    CHECK(v.status != LicciStatus::kUnknown);
    CHECK(v.rules.size() == 1);
    CHECK(v.rules.front().id == kRuleHunekeUlrich);
    const auto& trace = *v.hu_trace;
    for (std::size_t k = 0; k < trace.size(); ++k) CHECK(trace[k].k == k + 1);
    if (v.status == LicciStatus::kLicci) CHECK(trace.back().ideal.is_unit());
  }
}

TEST_CASE("verdicts do not depend on variable order") {
  for (const auto& ideal : corpus::random_artinian(73, 120, 4)) {
    std::vector<Monomial> reversed;
    for (const auto& g : ideal.generators()) {
      reversed.emplace_back(std::vector<Exponent>(g.exponents().rbegin(), g.exponents().rend()));
    }
    const MonomialIdeal r(ideal.vars(), reversed);
    CHECK(hu_decide(r).status == hu_decide(ideal).status);
  }
}

TEST_CASE("Artinian ideals in two variables are licci") {
  for (const auto& ideal : corpus::random_artinian(74, 200, 4)) {
    if (ideal.num_vars() > 2) continue;
    CHECK(hu_decide(ideal).status == LicciStatus::kLicci);
  }
}

TEST_CASE("degree obstruction examples") {
  const MonomialIdeal ic = complementary_edge_ideal(Graph::complete(4));
  CHECK(obstruction_not_licci(ic, invariants_of(ic)));
  const MonomialIdeal xy = I("x1, x2");
  CHECK_FALSE(obstruction_not_licci(xy, invariants_of(xy)));
  const MonomialIdeal cubics = complementary_edge_ideal(Graph::complete(5));
  CHECK(obstruction_not_licci(cubics, invariants_of(cubics)));
  // P_3(C_8) has pd 4 and height 3.
  const MonomialIdeal p3 = t_path_ideal(Graph::cycle(8), 3);
  CHECK_THROWS_AS(obstruction_not_licci(p3, invariants_of(p3)), std::invalid_argument);
  const MonomialIdeal c4 = edge_ideal(Graph::cycle(4));
  CHECK_THROWS_AS(obstruction_not_licci(c4, invariants_of(c4)), std::invalid_argument);
}

TEST_CASE("the obstruction never contradicts the iteration") {
  std::size_t fired = 0;
  std::vector<MonomialIdeal> ideals = corpus::random_artinian(75, 200, 4);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (unsigned k = 2; k <= 4; ++k) ideals.push_back(power(MonomialIdeal::maximal(VariableSet::indexed("x", n)), k));
  }
  for (const auto& ideal : ideals) {
    const Invariants inv = invariants_of(ideal);
    if (obstruction_not_licci(ideal, inv)) {
      ++fired;
      CHECK(hu_decide(ideal).status == LicciStatus::kNotLicci);
    }
  }
  CHECK(fired > 0);
}

TEST_CASE("classification cascade") {
  auto first = [](const MonomialIdeal& ideal) {
    const LicciVerdict v = classify(ideal);
    REQUIRE_FALSE(v.rules.empty());
    return std::make_pair(v.status, v.rules.front().id);
  };
  CHECK(first(edge_ideal(Graph::cycle(4))) == std::make_pair(LicciStatus::kNotLicci, std::string(kRuleNotCohenMacaulay)));
  CHECK(first(I("x1, x2*x3")) == std::make_pair(LicciStatus::kLicci, std::string(kRuleCompleteIntersection)));
  CHECK(first(edge_ideal(Graph::path(3))) == std::make_pair(LicciStatus::kNotLicci, std::string(kRuleNotCohenMacaulay)));
  CHECK(first(I("x1*x2, x1*x3, x2*x3")) == std::make_pair(LicciStatus::kLicci, std::string(kRuleHeightAtMostTwo)));
  CHECK(first(edge_ideal(Graph::cycle(5))) ==
        std::make_pair(LicciStatus::kLicci, std::string(kRuleGorensteinHeightThree)));
  CHECK(first(complementary_edge_ideal(Graph::complete(4))) ==
        std::make_pair(LicciStatus::kNotLicci, std::string(kRuleDegreeObstruction)));

  const LicciVerdict v = classify(I("x1^2, x2^2, x3^2, x1*x2, x2*x3"));
  CHECK(v.status == LicciStatus::kLicci);
  CHECK(v.rules.front().id == kRuleHunekeUlrich);
  CHECK(v.hu_trace);
  CHECK_FALSE(v.rules.front().citation.empty());

  CHECK_THROWS_AS(classify(I("0")), std::invalid_argument);
  CHECK_THROWS_AS(classify(I("1")), std::invalid_argument);
}

TEST_CASE("audits are consistent and agree with the first firing") {
  std::vector<MonomialIdeal> ideals = corpus::random_squarefree(76, 150, 6);
  for (auto& i : corpus::random_artinian(77, 60, 3)) ideals.push_back(i);
  for (const auto& ideal : ideals) {
    if (ideal.is_zero() || ideal.is_unit()) continue;
    const auto firings = audit(ideal);
    CHECK(audit_consistent(firings));
    const LicciVerdict v = classify(ideal);
    if (firings.empty()) {
      CHECK(v.status == LicciStatus::kUnknown);
      CHECK(v.rules.empty());
    } else {
      CHECK(v.rules.front() == firings.front());
      CHECK(v.status == firings.front().conclusion);
    }
  }
  CHECK_FALSE(audit_consistent({{"A", "", LicciStatus::kLicci, {}}, {"B", "", LicciStatus::kNotLicci, {}}}));
  CHECK(audit_consistent({{"A", "", LicciStatus::kLicci, {}}, {"B", "", LicciStatus::kUnknown, {}}}));
}

TEST_CASE("height bound for licci squarefree ideals") {
  for (const auto& ideal : corpus::random_squarefree(78, 150, 6)) {
    if (ideal.is_zero() || ideal.is_unit()) continue;
    CHECK(licci_bound_check(ideal, classify(ideal)));
  }
  LicciVerdict fake;
  fake.status = LicciStatus::kLicci;
  CHECK_THROWS_AS(licci_bound_check(I("x1^2"), fake), std::invalid_argument);
  // Every squarefree quadric in five variables: height 4 against a bound of 5 / 2 + 1.
  CHECK_FALSE(licci_bound_check(edge_ideal(Graph::complete(5)), fake));
  const MonomialIdeal cubics = complementary_edge_ideal(Graph::complete(5));
  CHECK(classify(cubics).status == LicciStatus::kNotLicci);
  CHECK(licci_bound_check(cubics, classify(cubics)));
}
