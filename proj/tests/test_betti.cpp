#include <doctest.h>

#include "monlink/betti.hpp"
#include "monlink/graph.hpp"
#include "monlink/harness.hpp"
#include "monlink/polarization.hpp"
#include "monlink/serialize.hpp"
#include "monlink/simplicial.hpp"
#include "oracles.hpp"

using namespace monlink;

namespace {

MonomialIdeal I(const std::string& text) { return parse_ideal_text(text); }

std::map<std::pair<int, int>, std::uint64_t> entries(const BettiTable& t) {
  return {t.entries().begin(), t.entries().end()};
}

}  // namespace

TEST_CASE("Koszul complex of the maximal ideal") {
  const BettiTable t = betti_table(MonomialIdeal::maximal(VariableSet::indexed("x", 4)));
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 1) == 4);
  CHECK(t.at(2, 2) == 6);
  CHECK(t.at(3, 3) == 4);
  CHECK(t.at(4, 4) == 1);
  CHECK(t.projective_dimension() == 4);
  CHECK(t.regularity() == 0);
}

TEST_CASE("known tables") {
  // Twisted cubic style: (xy, yz, xz) has a linear resolution 1, 3, 2.
  const BettiTable t = betti_table(I("x*y, y*z, x*z"));
  CHECK(t.at(1, 2) == 3);
  CHECK(t.at(2, 3) == 2);
  CHECK(t.entries().size() == 3);
  // Pentagon edge ideal: Gorenstein of height 3.
  const BettiTable c5 = betti_table(t_path_ideal(Graph::cycle(5), 2));
  CHECK(c5.at(1, 2) == 5);
  CHECK(c5.at(2, 3) == 5);
  CHECK(c5.at(3, 5) == 1);
  CHECK(c5.diagram() ==
        "       0 1 2 3\n"
        "total: 1 5 5 1\n"
        "    0: 1 . . .\n"
        "    1: . 5 5 .\n"
        "    2: . . . 1\n");
}

TEST_CASE("Hochster over the lcm lattice equals Hochster over all subsets") {
  for (const auto& ideal : corpus::random_squarefree(41, 120, 7)) {
    for (long long p : {0LL, 2LL}) {
      const FieldSpec f = p ? FieldSpec::prime(2) : FieldSpec::rationals();
      CHECK(entries(betti_table(ideal, f)) == oracle::hochster_all_subsets(ideal, p));
    }
  }
}

TEST_CASE("Hochster equals the Taylor oracle on monomial ideals") {
  for (const auto& ideal : corpus::random_monomial(42, 120, 5, 7, 3)) {
    CHECK(betti_table(ideal) == taylor_oracle(ideal));
    CHECK(betti_table(ideal, FieldSpec::prime(3)) == taylor_oracle(ideal, FieldSpec::prime(3)));
  }
}

TEST_CASE("Betti numbers depend on the characteristic") {
  // Stanley-Reisner ideal of the six-vertex projective plane.
  const int tri[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<std::uint64_t> facets;
  for (const auto& t : tri) facets.push_back((1u << t[0]) | (1u << t[1]) | (1u << t[2]));
  const auto rp2 = SimplicialComplex::from_facets(6, facets);
  const MonomialIdeal ideal = stanley_reisner_ideal(rp2, VariableSet::indexed("x", 6));
  const BettiTable q = betti_table(ideal, FieldSpec::rationals());
  const BettiTable f2 = betti_table(ideal, FieldSpec::prime(2));
  CHECK(q != f2);
  CHECK(f2.at(3, 6) == 1);
  CHECK(f2.at(4, 6) == 1);
  CHECK(q.at(3, 6) == 0);
  CHECK(entries(f2) == oracle::hochster_all_subsets(ideal, 2));
  CHECK(entries(q) == oracle::hochster_all_subsets(ideal, 0));
}

TEST_CASE("tables of ideals in disjoint variables multiply") {
  const MonomialIdeal a = I("x1*x2, x2*x3");
  const MonomialIdeal joined = parse_ideal_text("x1*x2, x2*x3, x4^2, x5*x6", VariableSet::indexed("x", 6));
  const BettiTable t = betti_table(joined);
  CHECK(t == taylor_oracle(joined));
  CHECK(t.total(1) == 4);
  // (1, 2, 1) times (1, 2, 1).
  CHECK(t.total(2) == 6);
  CHECK(t.total(3) == 4);
  CHECK(t.total(4) == 1);
  CHECK(t.projective_dimension() == 4);
  CHECK(betti_table(a).total(2) == 1);
}

TEST_CASE("Taylor oracle limits and errors") {
  std::vector<Monomial> many;
  for (std::size_t i = 0; i < 15; ++i) many.push_back(Monomial::variable(15, i));
  const MonomialIdeal big(VariableSet::indexed("x", 15), many);
  CHECK_THROWS_AS(taylor_oracle(big), std::invalid_argument);
  CHECK_THROWS_AS(betti_table(I("0")), std::invalid_argument);
  CHECK_THROWS_AS(betti_table(I("1")), std::invalid_argument);
}

TEST_CASE("polarization beyond the cap is refused") {
  const MonomialIdeal wide = parse_ideal_text("x1^13, x2^13");
  CHECK_THROWS_AS(betti_table(wide), VariableCapError);
}

TEST_CASE("invariants") {
  const MonomialIdeal ideal = complementary_edge_ideal(Graph::complete(4));
  const BettiTable t = betti_table(ideal);
  const Invariants inv = invariants(t, ideal);
  CHECK(inv.pd == 3);
  CHECK(inv.height == 3);
  CHECK(inv.is_cm);
  CHECK(inv.depth == 1);
  CHECK(inv.alpha == 2);
  CHECK(inv.has_linear_resolution);
  CHECK(inv.reg == 1);
  CHECK_FALSE(inv.is_gorenstein);

  const MonomialIdeal c5 = t_path_ideal(Graph::cycle(5), 2);
  const Invariants g = invariants(betti_table(c5), c5);
  CHECK(g.is_gorenstein);
  CHECK_FALSE(g.has_linear_resolution);

  const MonomialIdeal c4 = t_path_ideal(Graph::cycle(4), 2);
  CHECK_FALSE(invariants(betti_table(c4), c4).is_cm);
}

TEST_CASE("socle regularity matches the Betti table") {
  for (const auto& ideal : corpus::random_artinian(43, 50, 3)) {
    CHECK(static_cast<int>(reg_artinian_socle(ideal)) == betti_table(ideal).regularity());
  }
  CHECK(reg_artinian_socle(I("x1^2, x2^2, x3^2, x1*x2, x2*x3")) == 2);
  CHECK_THROWS_AS(reg_artinian_socle(I("x1, x2*x3")), std::invalid_argument);
}

TEST_CASE("Betti tables are invariant under variable permutation") {
  for (const auto& ideal : corpus::random_monomial(44, 40, 4, 5, 2)) {
    std::vector<Monomial> reversed;
    for (const auto& g : ideal.generators()) {
      std::vector<Exponent> e(g.exponents().rbegin(), g.exponents().rend());
      reversed.emplace_back(std::move(e));
    }
    CHECK(betti_table(MonomialIdeal(ideal.vars(), reversed)) == betti_table(ideal));
  }
}
