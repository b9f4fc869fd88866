#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monlink {

/// Coefficient field for homology ranks: the rationals or a prime field F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws std::invalid_argument unless `p` is prime.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q" (or "Q") and "fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_rationals() const { return characteristic_ == 0; }
  std::uint64_t characteristic() const { return characteristic_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

/// Integer matrix stored by rows; each row holds (column, value) pairs
/// sorted by column with no zeros and no repeated columns.
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  SparseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Sets entry (r, c); a zero value removes the entry. Throws
  /// std::out_of_range on a bad index.
  void set(std::size_t r, std::size_t c, std::int64_t value);
  std::int64_t at(std::size_t r, std::size_t c) const;

  const Row& row(std::size_t r) const { return rows_[r]; }
  const std::vector<Row>& row_data() const { return rows_; }
  std::size_t nonzeros() const;

  SparseMatrix transpose() const;

 private:
  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Rank over the given field. Over the rationals the elimination is
/// fraction-free on integers and switches to arbitrary precision if a
/// 64-bit intermediate would overflow.
std::size_t rank(const SparseMatrix& m, const FieldSpec& field);

}  // namespace monlink
