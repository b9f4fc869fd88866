#include <doctest.h>

#include "monlink/harness.hpp"
#include "monlink/serialize.hpp"
#include "monlink/simplicial.hpp"
#include "oracles.hpp"

using namespace monlink;

namespace {

std::map<int, std::size_t> as_map(const HomologyDims& dims) {
  std::map<int, std::size_t> out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k]) out[static_cast<int>(k) - 1] = dims[k];
  }
  return out;
}

// Six-vertex triangulation of the real projective plane.
const std::vector<std::uint64_t> kProjectivePlaneFacets = [] {
  const int tri[10][3] = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<std::uint64_t> out;
  for (const auto& t : tri) out.push_back((1u << t[0]) | (1u << t[1]) | (1u << t[2]));
  return out;
}();

}  // namespace

TEST_CASE("complex validation") {
  CHECK_THROWS_AS(SimplicialComplex(3, {0, 0b011}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex(2, {0, 0b100}), std::invalid_argument);
  const auto c = SimplicialComplex::from_facets(3, {0b011, 0b100});
  CHECK(c.faces().size() == 5);
  CHECK(c.dimension() == 1);
  CHECK(c.contains(0b010));
  CHECK_FALSE(c.contains(0b110));
  CHECK(SimplicialComplex::void_complex(3).dimension() == -2);
  CHECK(SimplicialComplex::irrelevant(3).dimension() == -1);
}

TEST_CASE("reduced homology of small spaces") {
  CHECK(reduced_homology_dims(SimplicialComplex::void_complex(2)).empty());
  CHECK(as_map(reduced_homology_dims(SimplicialComplex::irrelevant(2))) == std::map<int, std::size_t>{{-1, 1}});
  // Boundary of a tetrahedron: a 2-sphere.
  const auto sphere = SimplicialComplex::from_facets(4, {0b0111, 0b1011, 0b1101, 0b1110});
  CHECK(as_map(reduced_homology_dims(sphere)) == std::map<int, std::size_t>{{2, 1}});
  // Two points.
  CHECK(as_map(reduced_homology_dims(SimplicialComplex::from_facets(2, {0b01, 0b10}))) ==
        std::map<int, std::size_t>{{0, 1}});
  // A full simplex is acyclic.
  CHECK(as_map(reduced_homology_dims(SimplicialComplex::from_facets(3, {0b111}))).empty());
}

TEST_CASE("the projective plane sees the characteristic") {
  const auto rp2 = SimplicialComplex::from_facets(6, kProjectivePlaneFacets);
  CHECK(as_map(reduced_homology_dims(rp2, FieldSpec::rationals())).empty());
  CHECK(as_map(reduced_homology_dims(rp2, FieldSpec::prime(2))) == std::map<int, std::size_t>{{1, 1}, {2, 1}});
  CHECK(as_map(reduced_homology_dims(rp2, FieldSpec::prime(3))).empty());
}

TEST_CASE("homology agrees with dense elimination on Stanley-Reisner complexes") {
  for (const auto& ideal : corpus::random_squarefree(31, 80, 6)) {
    const SimplicialComplex c = stanley_reisner(ideal);
    for (long long p : {0LL, 2LL}) {
      const FieldSpec f = p ? FieldSpec::prime(2) : FieldSpec::rationals();
      CHECK(as_map(reduced_homology_dims(c, f)) == oracle::reduced_homology(c.faces(), p));
    }
  }
}

TEST_CASE("Stanley-Reisner correspondence") {
  for (const auto& ideal : corpus::random_squarefree(32, 80, 6)) {
    const SimplicialComplex c = stanley_reisner(ideal);
    const std::size_t n = ideal.num_vars();
    std::vector<std::uint64_t> expected;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
      if (!ideal.contains(Monomial::from_mask(n, f))) expected.push_back(f);
    }
    std::vector<std::uint64_t> got = c.faces();
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    CHECK(stanley_reisner_ideal(c, ideal.vars()) == ideal);
  }
  CHECK_THROWS_AS(stanley_reisner(parse_ideal_text("x^2")), std::invalid_argument);
}

TEST_CASE("induced subcomplexes") {
  const auto c = SimplicialComplex::from_facets(4, {0b0011, 0b0110, 0b1100});
  const auto sub = c.induced(0b0101);
  CHECK(sub.faces() == std::vector<std::uint64_t>{0, 0b0001, 0b0100});
}

TEST_CASE("minimal primes and Alexander duality") {
  for (const auto& ideal : corpus::random_squarefree(33, 150, 7)) {
    CHECK(minimal_primes(ideal) == oracle::minimal_primes(ideal));
    const MonomialIdeal dual = alexander_dual(ideal);
    CHECK(alexander_dual(dual) == ideal);
    CHECK(dual.num_generators() == minimal_primes(ideal).size());
  }
  const MonomialIdeal path = parse_ideal_text("x1*x2, x2*x3, x3*x4");
  CHECK(to_text(alexander_dual(path)) == "x1*x3, x2*x3, x2*x4");
  CHECK_THROWS_AS(alexander_dual(parse_ideal_text("x1^2")), std::invalid_argument);
}
