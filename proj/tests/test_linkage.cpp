#include <doctest.h>

#include <random>

#include "monlink/harness.hpp"
#include "monlink/linkage.hpp"
#include "monlink/serialize.hpp"
#include "oracles.hpp"

using namespace monlink;

namespace {

MonomialIdeal I(const std::string& text, std::size_t n = 3) {
  return parse_ideal_text(text, VariableSet::indexed("x", n));
}

std::vector<Monomial> gens_of(const MonomialIdeal& ideal) { return ideal.generators(); }

const LinkCheck& check_named(const LinkReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  FAIL("no check named " << name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("monomial regular sequences") {
  const std::size_t n = 4;
  auto m = [&](std::vector<Exponent> e) { return Monomial(std::move(e)); };
  const std::vector<Monomial> ok{m({1, 1, 0, 0}), m({0, 0, 2, 0})};
  const std::vector<Monomial> overlap{m({1, 1, 0, 0}), m({0, 1, 1, 0})};
  const std::vector<Monomial> with_one{Monomial::one(n)};
  CHECK(is_monomial_regular_sequence(ok));
  CHECK_FALSE(is_monomial_regular_sequence(overlap));
  CHECK_FALSE(is_monomial_regular_sequence(with_one));
  CHECK_FALSE(is_monomial_regular_sequence({}));
}

TEST_CASE("direct link of a small pair") {
  // (x1^2, x2^2, x3^2) : (x1^2, x2^2, x3^2, x1*x2, x2*x3) = (x1^2, x2, x3^2, x1*x3).
  const MonomialIdeal c = I("x1^2, x2^2, x3^2");
  const MonomialIdeal i1 = I("x1^2, x2^2, x3^2, x1*x2, x2*x3");
  const MonomialIdeal i2 = I("x1^2, x2, x3^2, x1*x3");
  const auto seq = gens_of(c);
  const LinkReport r = verify_direct_link(i1, i2, seq);
  CHECK(r.passed());
  CHECK(r.checks.size() == 4);
  CHECK(verify_direct_link(i2, i1, seq).passed());

  const LinkReport wrong = verify_direct_link(i1, I("x1^2, x2, x3^2"), seq);
  CHECK_FALSE(wrong.passed());
  CHECK_FALSE(check_named(wrong, "c : i2 = i1").passed);
  CHECK(check_named(wrong, "regular sequence").passed);
}

TEST_CASE("links through pure powers agree with brute-force colons") {
  std::mt19937_64 rng(81);
  std::size_t tried = 0;
  for (const auto& ideal : corpus::random_artinian(82, 80, 3)) {
    const std::size_t n = ideal.num_vars();
    const StandardForm f = standard_form(ideal);
    std::vector<Monomial> seq;
    for (std::size_t i = 0; i < n; ++i) seq.push_back(Monomial::variable(n, i, f.a[i] + static_cast<Exponent>(rng() % 2)));
    // c : I by brute force over a box holding every relevant exponent.
    const auto cg = oracle::generator_exps(MonomialIdeal(ideal.vars(), seq));
    const auto ig = oracle::generator_exps(ideal);
    Exponent bound = 0;
    for (const auto& s : seq) bound = std::max(bound, s.degree());
    const auto linked = oracle::ideal_from_predicate(n, bound + 1, [&](const oracle::Exps& m) {
      return std::all_of(ig.begin(), ig.end(), [&](const oracle::Exps& g) { return oracle::member(cg, oracle::mul(m, g)); });
    });
    std::vector<Monomial> linked_gens;
    for (const auto& e : linked) linked_gens.emplace_back(std::vector<Exponent>(e.begin(), e.end()));
    const MonomialIdeal j(ideal.vars(), linked_gens);
    const LinkReport r = verify_direct_link(ideal, j, seq);
    CHECK(r.passed());
    CHECK(verify_direct_link(j, ideal, seq).passed());
    ++tried;
  }
  CHECK(tried == 80);
}

TEST_CASE("linked ideals share their height") {
  for (const auto& ideal : corpus::random_artinian(83, 40, 3)) {
    const std::size_t n = ideal.num_vars();
    std::vector<Monomial> seq;
    const StandardForm f = standard_form(ideal);
    for (std::size_t i = 0; i < n; ++i) seq.push_back(Monomial::variable(n, i, f.a[i]));
    const MonomialIdeal c(ideal.vars(), seq);
    const MonomialIdeal j = colon(c, ideal);
    if (j.is_unit()) continue;
    CHECK(height(j) == height(ideal));
    CHECK(verify_direct_link(ideal, j, seq).passed());
  }
}

TEST_CASE("failed preconditions are reported, not thrown") {
  const MonomialIdeal i1 = I("x1, x2");
  const std::vector<Monomial> not_inside{Monomial::variable(3, 2)};
  const LinkReport r = verify_direct_link(i1, i1, not_inside);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(check_named(r, "c in i1 and i2").passed);

  const LinkReport rings = verify_direct_link(i1, I("x1", 2), not_inside);
  CHECK_FALSE(rings.passed());
  CHECK(rings.checks.front().name == "same ring");
  CHECK_FALSE(LinkReport{}.passed());
}

TEST_CASE("linkage ladder for an edge plus isolated vertices") {
  for (auto [n, t] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}}) {
    CAPTURE(n);
    CAPTURE(t);
    const LinkReport r = verify_suspension_chain(n, t);
    CHECK(r.passed());
    CHECK(r.checks.size() >= 10);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("ladder parameters out of range") {
  CHECK_FALSE(verify_suspension_chain(1, 3).passed());
  CHECK_FALSE(verify_suspension_chain(2, 2).passed());
}
