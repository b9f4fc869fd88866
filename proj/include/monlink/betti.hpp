#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "monlink/exact_field.hpp"
#include "monlink/monomial.hpp"

namespace monlink {

/// Graded Betti numbers beta_{i,j}(S/I), keyed by (homological degree i,
/// internal degree j). Only nonzero entries are stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  BettiTable() = default;
  BettiTable(std::size_t n_vars, FieldSpec field) : n_vars_(n_vars), field_(field) {}

  std::size_t n_vars() const { return n_vars_; }
  const FieldSpec& field() const { return field_; }
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }

  void add(int i, int j, std::uint64_t count);
  std::uint64_t at(int i, int j) const;
  /// Sum of beta_{i,j} over j.
  std::uint64_t total(int i) const;

  /// Largest i with a nonzero entry.
  int projective_dimension() const;
  /// max(j - i) over nonzero entries.
  int regularity() const;

  /// Macaulay2-style diagram: columns i, rows j - i.
  std::string diagram() const;

  /// Tables coincide when their nonzero entries do; ring size and field are
  /// not compared so that polarized and depolarized tables can be matched.
  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::size_t n_vars_ = 0;
  FieldSpec field_;
  std::map<Key, std::uint64_t> entries_;
};

/// Betti table of S/I: the ideal is polarized and each variable-disjoint
/// block is handled by Hochster's formula over its lcm lattice. Throws
/// std::invalid_argument for zero or unit ideals and VariableCapError if the
/// polarization is too large.
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals());

/// Independent route through the Taylor complex tensored with the field.
inline constexpr std::size_t kTaylorGeneratorLimit = 14;
BettiTable taylor_oracle(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals());

struct Invariants {
  int pd = 0;
  int reg = 0;
  int depth = 0;
  std::size_t height = 0;
  bool is_cm = false;
  bool is_gorenstein = false;
  bool has_linear_resolution = false;
  unsigned alpha = 0;
};

Invariants invariants(const BettiTable& table, const MonomialIdeal& ideal);

/// Regularity of S/I for Artinian I as the top socle degree.
unsigned reg_artinian_socle(const MonomialIdeal& ideal);

}  // namespace monlink
