#include "monlink/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

namespace monlink {

std::size_t variable_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("MONLINK_VAR_CAP")) {
      char* end = nullptr;
      const unsigned long value = std::strtoul(env, &end, 10);
      // Squarefree machinery packs supports into 64-bit masks.
      if (end != env && *end == '\0' && value > 0 && value <= 64) return std::size_t{value};
    }
    return kDefaultVariableCap;
  }();
  return cap;
}

VariableCapError::VariableCapError(std::size_t requested, std::size_t cap)
    : std::length_error("variable count " + std::to_string(requested) + " exceeds the cap of " +
                        std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  Monomial m(num_vars);
  m.exponents_.at(index) = power;
  return m;
}

Monomial Monomial::squarefree(std::size_t num_vars, std::span<const std::size_t> vars) {
  Monomial m(num_vars);
  for (std::size_t v : vars) m.exponents_.at(v) = 1;
  return m;
}

Monomial Monomial::from_mask(std::size_t num_vars, std::uint64_t mask) {
  Monomial m(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (mask >> i & 1) m.exponents_[i] = 1;
  }
  return m;
}

unsigned Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(exponents_.begin(), exponents_.end(), [](Exponent e) { return e > 0; }));
}

std::uint64_t Monomial::support_mask() const {
  if (exponents_.size() > 64) throw std::length_error("support mask needs at most 64 variables");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.exponents_[i] = a[i] + b[i];
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::invalid_argument("monomial quotient is not exact");
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.exponents_[i] = a[i] - b[i];
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) { return a / gcd(a, b); }

// ---------------------------------------------------------------------------
// VariableSet

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate variable name");
  }
}

VariableSet VariableSet::indexed(const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return VariableSet(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal minimalize(VariableSet vars, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal::MonomialIdeal(VariableSet vars, std::vector<Monomial> gens)
    : vars_(std::move(vars)) {
  for (const auto& g : gens) {
    if (g.size() != vars_.size()) {
      throw std::invalid_argument("generator has " + std::to_string(g.size()) +
                                  " exponents but the ring has " +
                                  std::to_string(vars_.size()) + " variables");
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Graded order puts every divisor of g before g.
  for (auto& g : gens) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                       [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::unit(VariableSet vars) {
  const std::size_t n = vars.size();
  return MonomialIdeal(std::move(vars), {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::maximal(VariableSet vars) {
  const std::size_t n = vars.size();
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::variable(n, i));
  return MonomialIdeal(std::move(vars), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_equigenerated() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.degree() == gens_.front().degree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::with_vars(VariableSet vars) const {
  return MonomialIdeal(std::move(vars), gens_);
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("ideals live in rings with different variable counts");
  }
}

}  // namespace

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) gens.push_back(g * m);
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned k) {
  if (k == 0) throw std::invalid_argument("ideal power needs k >= 1");
  MonomialIdeal result = ideal;
  for (unsigned i = 1; i < k; ++i) result = result * ideal;
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.num_generators() * b.num_generators());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(lcm(f, g));
  }
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& by) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) gens.push_back(colon(g, by));
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal, by);
  if (by.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  MonomialIdeal result = colon(ideal, by.generators().front());
  for (std::size_t i = 1; i < by.num_generators(); ++i) {
    result = intersect(result, colon(ideal, by.generators()[i]));
  }
  return result;
}

bool is_contained(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Monomial& g) { return b.contains(g); });
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) e[i] = g[i] > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

namespace {

// Minimum hitting set of `edges` by branching on the smallest unhit edge.
void min_transversal(const std::vector<std::uint64_t>& edges, std::uint64_t chosen,
                     std::size_t count, std::size_t& best) {
  const std::uint64_t* unhit = nullptr;
  for (const auto& e : edges) {
    if ((e & chosen) == 0 && (unhit == nullptr || std::popcount(e) < std::popcount(*unhit))) {
      unhit = &e;
    }
  }
  if (unhit == nullptr) {
    best = std::min(best, count);
    return;
  }
  if (count + 1 >= best) return;
  for (std::uint64_t rest = *unhit; rest != 0; rest &= rest - 1) {
    min_transversal(edges, chosen | (rest & -rest), count + 1, best);
  }
}

}  // namespace

std::size_t height(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("height of the zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument("height of the unit ideal");
  const MonomialIdeal rad = radical(ideal);
  std::vector<std::uint64_t> edges;
  std::uint64_t all = 0;
  for (const auto& g : rad.generators()) {
    edges.push_back(g.support_mask());
    all |= edges.back();
  }
  std::size_t best = static_cast<std::size_t>(std::popcount(all));
  min_transversal(edges, 0, 0, best);
  return best;
}

unsigned alpha(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("alpha of the zero ideal");
  // Graded order: the first generator has minimum degree.
  return ideal.generators().front().degree();
}

bool is_artinian(const MonomialIdeal& ideal) {
  std::vector<bool> has_power(ideal.num_vars(), false);
  for (const auto& g : ideal.generators()) {
    if (auto v = g.pure_power_variable()) has_power[*v] = true;
  }
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  if (ideal.num_vars() > 64) {
    for (std::size_t i = 0; i < ideal.num_generators(); ++i) {
      for (std::size_t j = i + 1; j < ideal.num_generators(); ++j) {
        if (!gcd(ideal.generators()[i], ideal.generators()[j]).is_one()) return false;
      }
    }
    return true;
  }
  std::uint64_t seen = 0;
  for (const auto& g : ideal.generators()) {
    const std::uint64_t mask = g.support_mask();
    if (mask & seen) return false;
    seen |= mask;
  }
  return true;
}

StandardForm standard_form(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw std::invalid_argument("standard form of the unit ideal");
  if (!is_artinian(ideal)) throw std::invalid_argument("standard form needs an Artinian ideal");
  const std::size_t n = ideal.num_vars();
  StandardForm form;
  form.a.assign(n, 0);
  std::vector<Monomial> sharp;
  for (const auto& g : ideal.generators()) {
    if (auto v = g.pure_power_variable()) {
      form.a[*v] = g[*v];
    } else {
      sharp.push_back(g);
    }
  }
  form.b.assign(n, 0);
  if (sharp.empty()) {
    form.sharp = MonomialIdeal::zero(ideal.vars());
    form.k_ideal = MonomialIdeal::zero(ideal.vars());
    return form;
  }
  Monomial common = sharp.front();
  for (const auto& g : sharp) common = gcd(common, g);
  form.b.assign(common.exponents().begin(), common.exponents().end());
  std::vector<Monomial> k_gens;
  for (const auto& g : sharp) k_gens.push_back(g / common);
  form.sharp = MonomialIdeal(ideal.vars(), std::move(sharp));
  form.k_ideal = MonomialIdeal(ideal.vars(), std::move(k_gens));
  return form;
}

std::vector<Monomial> socle_monomials(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal)) throw std::invalid_argument("socle needs an Artinian ideal");
  const std::size_t n = ideal.num_vars();
  std::vector<Exponent> bound(n, 0);
  for (const auto& g : ideal.generators()) {
    if (auto v = g.pure_power_variable()) bound[*v] = g[*v] - 1;
  }
  std::vector<Monomial> socle;
  std::vector<Exponent> e(n, 0);
  while (true) {
    Monomial m(e);
    if (!ideal.contains(m)) {
      bool annihilated = true;
      for (std::size_t i = 0; i < n && annihilated; ++i) {
        annihilated = ideal.contains(m * Monomial::variable(n, i));
      }
      if (annihilated) socle.push_back(std::move(m));
    }
    std::size_t i = 0;
    while (i < n && e[i] == bound[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  std::sort(socle.begin(), socle.end());
  return socle;
}

}  // namespace monlink
