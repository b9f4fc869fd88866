#include "monlink/linkage.hpp"

#include <functional>

#include "monlink/graph.hpp"

namespace monlink {

bool LinkReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

bool is_monomial_regular_sequence(std::span<const Monomial> ms) {
  if (ms.empty()) return false;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].is_one()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!gcd(ms[i], ms[j]).is_one()) return false;
    }
  }
  return true;
}

LinkReport verify_direct_link(const MonomialIdeal& i1, const MonomialIdeal& i2,
                              std::span<const Monomial> regseq) {
  LinkReport report;
  const VariableSet& vars = i1.vars();
  if (i1.num_vars() != i2.num_vars()) {
    report.checks.push_back({"same ring", false, {{"i1", i1}, {"i2", i2}}});
    return report;
  }
  for (const auto& m : regseq) {
    if (m.size() != i1.num_vars()) {
      report.checks.push_back({"same ring", false, {{"i1", i1}}});
      return report;
    }
  }
  const MonomialIdeal c(vars, std::vector<Monomial>(regseq.begin(), regseq.end()));
  report.checks.push_back({"regular sequence", is_monomial_regular_sequence(regseq), {{"c", c}}});
  const MonomialIdeal meet = intersect(i1, i2);
  report.checks.push_back({"c in i1 and i2", is_contained(c, meet), {{"c", c}, {"i1 meet i2", meet}}});
  if (c.is_zero()) {
    report.checks.push_back({"c : i2 = i1", false, {}});
    report.checks.push_back({"c : i1 = i2", false, {}});
    return report;
  }
  const MonomialIdeal c_i2 = colon(c, i2);
  report.checks.push_back({"c : i2 = i1", c_i2 == i1, {{"c : i2", c_i2}, {"i1", i1}}});
  const MonomialIdeal c_i1 = colon(c, i1);
  report.checks.push_back({"c : i1 = i2", c_i1 == i2, {{"c : i1", c_i1}, {"i2", i2}}});
  return report;
}

namespace {

// x_{i,j} of the suspension, vertex i in 0..n-1 and 0 <= j < t.
struct SuspensionRing {
  std::size_t n;
  std::size_t t;
  VariableSet vars;

  std::size_t index(std::size_t i, std::size_t j) const {
    return j == 0 ? i : n + i * (t - 1) + (j - 1);
  }
  // prod_{j=from}^{to-1} x_{i,j}
  Monomial run(std::size_t i, std::size_t from, std::size_t to) const {
    std::vector<Exponent> e(vars.size(), 0);
    for (std::size_t j = from; j < to; ++j) e[index(i, j)] = 1;
    return Monomial(std::move(e));
  }
  MonomialIdeal ideal(std::vector<Monomial> gens) const { return MonomialIdeal(vars, std::move(gens)); }

  // Whiskers of the isolated vertices.
  std::vector<Monomial> whiskers() const {
    std::vector<Monomial> out;
    for (std::size_t i = 2; i < n; ++i) out.push_back(run(i, 0, t));
    return out;
  }
  MonomialIdeal with_whiskers(std::vector<Monomial> gens) const {
    for (auto& w : whiskers()) gens.push_back(std::move(w));
    return ideal(std::move(gens));
  }

  // Paths of k vertices through the edge, for l in [lo, hi].
  std::vector<Monomial> edge_paths(std::size_t k, std::size_t lo, std::size_t hi) const {
    std::vector<Monomial> out;
    for (std::size_t l = lo; l <= hi; ++l) out.push_back(run(0, 0, l) * run(1, 0, k - l));
    return out;
  }
  // The same without x10 x20.
  std::vector<Monomial> inner_paths(std::size_t k) const {
    std::vector<Monomial> out;
    for (std::size_t l = 1; l + 1 <= k; ++l) out.push_back(run(0, 1, l) * run(1, 1, k - l));
    return out;
  }

  MonomialIdeal i_k(std::size_t k) const { return with_whiskers(edge_paths(k, 0, k)); }
  MonomialIdeal j_k(std::size_t k) const { return with_whiskers({run(0, 0, k), run(1, 0, k)}); }
  MonomialIdeal i_prime(std::size_t k) const { return with_whiskers(inner_paths(k)); }
  MonomialIdeal j_prime(std::size_t k) const { return with_whiskers({run(0, 1, k), run(1, 1, k)}); }

  // x_{i,j} -> x_{i,j-1} on the two edge vertices, x_{i,0} -> x_{i,t-1}.
  MonomialIdeal shift_down(const MonomialIdeal& ideal) const {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
      std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < t; ++j) e[index(i, j)] = g[index(i, (j + 1) % t)];
      }
      gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(vars, std::move(gens));
  }
};

void add(LinkReport& report, std::string name, bool passed,
         std::vector<std::pair<std::string, MonomialIdeal>> witnesses) {
  report.checks.push_back({std::move(name), passed, std::move(witnesses)});
}

void append(LinkReport& report, const std::string& prefix, const LinkReport& sub) {
  for (const auto& c : sub.checks) report.checks.push_back({prefix + c.name, c.passed, c.witnesses});
}

void verify_rung(LinkReport& report, const SuspensionRing& ring, std::size_t k) {
  const std::string tag = "k=" + std::to_string(k) + ": ";
  const MonomialIdeal i = ring.i_k(k);
  const MonomialIdeal j = ring.j_k(k);
  const MonomialIdeal ip = ring.i_prime(k);
  const MonomialIdeal jp = ring.j_prime(k);

  add(report, tag + "J complete intersection in I",
      is_complete_intersection(j) && is_contained(j, i), {{"I", i}, {"J", j}});
  add(report, tag + "J' complete intersection in I'",
      is_complete_intersection(jp) && is_contained(jp, ip), {{"I'", ip}, {"J'", jp}});
  add(report, tag + "height J = height I", height(j) == height(i), {{"I", i}, {"J", j}});
  add(report, tag + "height J' = height I'", height(jp) == height(ip), {{"I'", ip}, {"J'", jp}});

  const MonomialIdeal line0 = colon(j, i);
  const MonomialIdeal middle = ring.ideal(ring.edge_paths(k, 1, k - 1));
  const MonomialIdeal line1 = colon(j, middle);
  add(report, tag + "J : I drops generators lying in J", line1 == line0,
      {{"J : I", line0}, {"line 1", line1}});
  const MonomialIdeal inner = ring.ideal(ring.inner_paths(k));
  const Monomial x10x20 = ring.run(0, 0, 1) * ring.run(1, 0, 1);
  add(report, tag + "x10 x20 factors out", multiply(inner, x10x20) == middle,
      {{"paths", middle}, {"inner", inner}});
  const MonomialIdeal line2 = colon(j, multiply(inner, x10x20));
  const MonomialIdeal j_over = colon(j, x10x20);
  add(report, tag + "J : x10 x20 = J'", j_over == jp, {{"J : x10 x20", j_over}, {"J'", jp}});
  const MonomialIdeal line3 = colon(jp, inner);
  const MonomialIdeal line4 = colon(jp, ip);
  add(report, tag + "colon chain", line0 == line1 && line1 == line2 && line2 == line3 && line3 == line4,
      {{"line 1", line1}, {"line 2", line2}, {"line 3", line3}, {"J' : I'", line4}});

  append(report, tag + "I ~ J:I: ", verify_direct_link(i, line0, j.generators()));
  append(report, tag + "I' ~ J':I': ", verify_direct_link(ip, line4, jp.generators()));

  const MonomialIdeal shifted = ring.shift_down(ip);
  const MonomialIdeal lower = ring.i_k(k - 2);
  add(report, tag + "I' shifts to I_{k-2}", shifted == lower, {{"shifted I'", shifted}, {"I_{k-2}", lower}});
}

}  // namespace

LinkReport verify_suspension_chain(std::size_t n, std::size_t t) {
  LinkReport report;
  if (n < 2 || t < 3) {
    add(report, "parameters n >= 2, t >= 3", false, {});
    return report;
  }
  const Graph edge(n, {{0, 1}});
  const Graph sigma = suspension(edge, t);
  const SuspensionRing ring{n, t, sigma.variables()};

  const MonomialIdeal top = ring.i_k(t);
  const MonomialIdeal paths = t_path_ideal(sigma, t);
  add(report, "I_t = P_t(suspension)", top == paths, {{"I_t", top}, {"P_t", paths}});

  for (std::size_t k = t; k >= 3; k -= 2) verify_rung(report, ring, k);

  const MonomialIdeal i1 = ring.i_k(1);
  add(report, "I_1 complete intersection", is_complete_intersection(i1), {{"I_1", i1}});

  const MonomialIdeal i2 = ring.i_k(2);
  const MonomialIdeal c = ring.with_whiskers({ring.run(0, 0, 2), ring.run(1, 0, 2)});
  const Monomial x10x20 = ring.run(0, 0, 1) * ring.run(1, 0, 1);
  const MonomialIdeal c_i2 = colon(c, i2);
  const MonomialIdeal c_x = colon(c, x10x20);
  const MonomialIdeal expected = ring.with_whiskers({ring.run(0, 1, 2), ring.run(1, 1, 2)});
  add(report, "C : I_2 = C : x10 x20 = (x11, x21) + W", c_i2 == c_x && c_x == expected,
      {{"C : I_2", c_i2}, {"C : x10 x20", c_x}, {"expected", expected}});
  add(report, "C : I_2 complete intersection", is_complete_intersection(c_i2), {{"C : I_2", c_i2}});
  append(report, "I_2 ~ C:I_2: ", verify_direct_link(i2, c_i2, c.generators()));
  return report;
}

}  // namespace monlink
