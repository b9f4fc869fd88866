#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monlink {

using Exponent = std::uint32_t;

/// Default bound on ambient (and polarized) variable counts. The
/// MONLINK_VAR_CAP environment variable overrides it.
inline constexpr std::size_t kDefaultVariableCap = 24;
std::size_t variable_cap();

/// Raised when a construction would exceed the variable cap.
class VariableCapError : public std::length_error {
 public:
  VariableCapError(std::size_t requested, std::size_t cap);
  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Exponent vector over a fixed, ordered variable set.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exponents_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

  static Monomial one(std::size_t num_vars) { return Monomial(num_vars); }
  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);
  /// Product of the variables in `vars`.
  static Monomial squarefree(std::size_t num_vars, std::span<const std::size_t> vars);
  static Monomial from_mask(std::size_t num_vars, std::uint64_t mask);

  std::size_t size() const { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }

  unsigned degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  std::size_t support_size() const;
  /// Bit i set iff x_i divides the monomial; requires size() <= 64.
  std::uint64_t support_mask() const;
  /// The variable index when the monomial is a pure power x_i^e with e >= 1.
  std::optional<std::size_t> pure_power_variable() const;

  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; throws std::invalid_argument unless `b` divides `a`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded order: lower degree first, then larger exponent of x_1 first.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exponents_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): the generator of the principal colon (a) : b.
Monomial colon(const Monomial& a, const Monomial& b);

/// Ordered variable names. Names are metadata: ideals compare by exponents.
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);
  /// prefix1, ..., prefixN.
  static VariableSet indexed(const std::string& prefix, std::size_t count);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const VariableSet&, const VariableSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Monomial ideal held by its minimal generators in graded order. The zero
/// ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens`. Throws std::invalid_argument on a length mismatch.
  MonomialIdeal(VariableSet vars, std::vector<Monomial> gens);

  static MonomialIdeal zero(VariableSet vars) { return MonomialIdeal(std::move(vars), {}); }
  static MonomialIdeal unit(VariableSet vars);
  /// (x_1, ..., x_n).
  static MonomialIdeal maximal(VariableSet vars);

  const VariableSet& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;
  bool is_principal() const { return gens_.size() == 1; }
  /// Every generator has the same degree.
  bool is_equigenerated() const;

  /// True iff some generator divides `m`.
  bool contains(const Monomial& m) const;

  /// Same generators over a different naming of the same number of variables.
  MonomialIdeal with_vars(VariableSet vars) const;

  /// Equality of generator sets; variable names are ignored.
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.num_vars() == b.num_vars() && a.gens_ == b.gens_;
  }

 private:
  VariableSet vars_;
  std::vector<Monomial> gens_;
};

/// The Artinian decomposition I = (x_i^{a_i}) + x^B K.
struct StandardForm {
  std::vector<Exponent> a;
  MonomialIdeal sharp;
  std::vector<Exponent> b;
  MonomialIdeal k_ideal;

  Monomial x_b() const { return Monomial(b); }
};

MonomialIdeal minimalize(VariableSet vars, std::vector<Monomial> gens);

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& ideal, const Monomial& m);
/// k-fold product; k >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// I : J. Throws std::invalid_argument if `by` is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& by);

/// a ⊆ b.
bool is_contained(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal radical(const MonomialIdeal& ideal);

/// Minimum number of variables meeting every generator support. Throws
/// std::invalid_argument for the zero or unit ideal.
std::size_t height(const MonomialIdeal& ideal);

/// Minimum generator degree. Throws std::invalid_argument for the zero ideal.
unsigned alpha(const MonomialIdeal& ideal);

/// Every variable has a pure power among the generators.
bool is_artinian(const MonomialIdeal& ideal);

/// Minimal generators have pairwise disjoint supports.
bool is_complete_intersection(const MonomialIdeal& ideal);

/// Standard form of a proper Artinian ideal. `b` is the gcd of the sharp
/// generators; a single sharp generator yields K = (1).
StandardForm standard_form(const MonomialIdeal& ideal);

/// Monomials outside the ideal that every variable multiplies into it.
std::vector<Monomial> socle_monomials(const MonomialIdeal& ideal);

}  // namespace monlink
