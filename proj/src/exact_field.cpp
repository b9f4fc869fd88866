#include "monlink/exact_field.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace monlink {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

struct Overflow {};

// int64 arithmetic that throws Overflow instead of wrapping.
struct CheckedInt {
  std::int64_t v = 0;

  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
    return {r};
  }
  friend CheckedInt operator-(CheckedInt a) {
    if (a.v == INT64_MIN) throw Overflow{};
    return {-a.v};
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return {a.v / b.v}; }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v == b.v; }
  friend bool operator<(CheckedInt a, CheckedInt b) { return a.v < b.v; }
  bool is_zero() const { return v == 0; }
  bool is_unit() const { return v == 1 || v == -1; }
};

CheckedInt gcd_of(CheckedInt a, CheckedInt b) {
  if (a.v == INT64_MIN || b.v == INT64_MIN) throw Overflow{};
  return {std::gcd(a.v, b.v)};
}

using BigInt = boost::multiprecision::cpp_int;

BigInt gcd_of(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

bool is_zero(const BigInt& a) { return a.is_zero(); }
bool is_zero(CheckedInt a) { return a.is_zero(); }
bool is_unit(const BigInt& a) { return a == 1 || a == -1; }
bool is_unit(CheckedInt a) { return a.is_unit(); }

template <class Int>
Int from_int64(std::int64_t v) {
  if constexpr (std::is_same_v<Int, CheckedInt>) {
    return CheckedInt{v};
  } else {
    return Int(v);
  }
}

template <class Int>
using IntRow = std::vector<std::pair<std::uint32_t, Int>>;

// Divides the row by the gcd of its entries and makes the leading entry
// positive.
template <class Int>
void normalize(IntRow<Int>& row) {
  Int g = from_int64<Int>(0);
  for (const auto& [col, value] : row) {
    g = gcd_of(g, value);
    if (is_unit(g)) break;
  }
  if (row.front().second < from_int64<Int>(0)) g = -g;
  if (!(g == from_int64<Int>(1))) {
    for (auto& entry : row) entry.second = entry.second / g;
  }
}

// row := a*row - b*pivot, dropping the cancelled leading column.
template <class Int>
IntRow<Int> combine(const IntRow<Int>& row, const Int& a, const IntRow<Int>& pivot,
                    const Int& b) {
  IntRow<Int> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -(b * pivot[j].second));
      ++j;
    } else {
      Int v = a * row[i].second + -(b * pivot[j].second);
      if (!is_zero(v)) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Int>
std::size_t integer_rank(const std::vector<SparseMatrix::Row>& rows) {
  std::vector<IntRow<Int>> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.empty()) continue;
    IntRow<Int> converted;
    converted.reserve(r.size());
    for (const auto& [c, v] : r) converted.emplace_back(c, from_int64<Int>(v));
    work.push_back(std::move(converted));
  }
  std::stable_sort(work.begin(), work.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::unordered_map<std::uint32_t, IntRow<Int>> pivots;
  for (auto& row : work) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        normalize(row);
        const std::uint32_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      const IntRow<Int>& pivot = it->second;
      Int a = pivot.front().second;
      Int b = row.front().second;
      const Int g = gcd_of(a, b);
      a = a / g;
      b = b / g;
      row = combine(row, a, pivot, b);
      if (!row.empty()) normalize(row);
    }
  }
  return pivots.size();
}

std::size_t modular_rank(const std::vector<SparseMatrix::Row>& rows, std::uint64_t p) {
  using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  std::vector<ModRow> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    ModRow converted;
    for (const auto& [c, v] : r) {
      std::int64_t m = v % static_cast<std::int64_t>(p);
      if (m < 0) m += static_cast<std::int64_t>(p);
      if (m != 0) converted.emplace_back(c, static_cast<std::uint64_t>(m));
    }
    if (!converted.empty()) work.push_back(std::move(converted));
  }
  std::stable_sort(work.begin(), work.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::unordered_map<std::uint32_t, ModRow> pivots;
  for (auto& row : work) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const std::uint64_t inv = inverse_mod(row.front().second, p);
        for (auto& entry : row) entry.second = mulmod(entry.second, inv, p);
        const std::uint32_t lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      // Pivot rows have leading coefficient 1.
      const ModRow& pivot = it->second;
      const std::uint64_t factor = row.front().second;
      ModRow out;
      out.reserve(row.size() + pivot.size());
      std::size_t i = 1, j = 1;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
          out.push_back(row[i++]);
        } else {
          const std::uint64_t sub = mulmod(factor, pivot[j].second, p);
          if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, (p - sub) % p);
          } else {
            const std::uint64_t v = (row[i].second + p - sub) % p;
            if (v != 0) out.emplace_back(row[i].first, v);
            ++i;
          }
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return pivots.size();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                              31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  FieldSpec f;
  f.characteristic_ = p;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.starts_with("fp:")) {
    std::uint64_t p = 0;
    const auto digits = text.substr(3);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw std::invalid_argument("unrecognized field '" + std::string(text) +
                              "' (expected q or fp:<prime>)");
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? "q" : "fp:" + std::to_string(characteristic_);
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

void SparseMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("matrix index out of range");
  auto& row = rows_[r];
  const auto col = static_cast<std::uint32_t>(c);
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& entry, std::uint32_t k) { return entry.first < k; });
  if (it != row.end() && it->first == col) {
    if (value == 0) {
      row.erase(it);
    } else {
      it->second = value;
    }
  } else if (value != 0) {
    row.insert(it, {col, value});
  }
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_) throw std::out_of_range("matrix index out of range");
  const auto& row = rows_[r];
  const auto col = static_cast<std::uint32_t>(c);
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& entry, std::uint32_t k) { return entry.first < k; });
  return (it != row.end() && it->first == col) ? it->second : 0;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(static_cast<std::uint32_t>(r), v);
  }
  return t;
}

std::size_t rank(const SparseMatrix& m, const FieldSpec& field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!field.is_rationals()) return modular_rank(m.row_data(), field.characteristic());
  try {
    return integer_rank<CheckedInt>(m.row_data());
  } catch (const Overflow&) {
    return integer_rank<BigInt>(m.row_data());
  }
}

}  // namespace monlink
