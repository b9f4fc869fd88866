#pragma once

// Brute-force reference computations. Everything here is deliberately naive
// and shares no code with the library beyond the Monomial/MonomialIdeal
// containers.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "monlink/monomial.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Dense = std::vector<std::vector<long long>>;

inline cpp_int laplace_det(const std::vector<std::vector<cpp_int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  cpp_int det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<cpp_int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<cpp_int> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const cpp_int term = m[0][c] * laplace_det(minor);
    det += (c % 2 == 0) ? term : cpp_int(-term);
  }
  return det;
}

// Largest k with a nonzero k x k minor. Exponential; for tiny matrices.
inline std::size_t rank_by_minors(const Dense& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    for (std::uint32_t rmask = 0; rmask < (1u << rows); ++rmask) {
      if (static_cast<std::size_t>(std::popcount(rmask)) != k) continue;
      for (std::uint32_t cmask = 0; cmask < (1u << cols); ++cmask) {
        if (static_cast<std::size_t>(std::popcount(cmask)) != k) continue;
        std::vector<std::vector<cpp_int>> m;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!(rmask >> r & 1)) continue;
          std::vector<cpp_int> row;
          for (std::size_t c = 0; c < cols; ++c) {
            if (cmask >> c & 1) row.push_back(a[r][c]);
          }
          m.push_back(std::move(row));
        }
        if (laplace_det(m) != 0) return k;
      }
    }
  }
  return 0;
}

// Textbook Gaussian elimination over exact rationals.
inline std::size_t rational_rank(const Dense& a) {
  std::vector<std::vector<cpp_rational>> m;
  for (const auto& row : a) m.emplace_back(row.begin(), row.end());
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const cpp_rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Rank over GF(p) by counting the row space: |span| = p^rank.
inline std::size_t fp_rank_by_span(const Dense& a, long long p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::set<std::vector<long long>> span;
  std::vector<long long> coef(rows, 0);
  while (true) {
    std::vector<long long> v(cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) v[c] = ((v[c] + coef[r] * a[r][c]) % p + p) % p;
    }
    span.insert(v);
    std::size_t i = 0;
    while (i < rows && coef[i] == p - 1) coef[i++] = 0;
    if (i == rows) break;
    ++coef[i];
  }
  std::size_t rank = 0;
  for (std::size_t size = span.size(); size > 1; size /= static_cast<std::size_t>(p)) ++rank;
  return rank;
}

inline std::size_t dense_rank(const Dense& a, long long p) {
  if (p == 0) return rational_rank(a);
  // Gaussian elimination mod p.
  Dense m = a;
  for (auto& row : m) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  auto inv = [p](long long x) {
    long long r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t q = rank;
    while (q < rows && m[q][c] == 0) ++q;
    if (q == rows) continue;
    std::swap(m[q], m[rank]);
    const long long iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long f = m[r][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// ------------------------------------------------------------ monomials

using Exps = std::vector<monlink::Exponent>;

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline std::vector<Exps> generator_exps(const monlink::MonomialIdeal& ideal) {
  std::vector<Exps> out;
  for (const auto& g : ideal.generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

inline bool member(const std::vector<Exps>& gens, const Exps& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); });
}

// Every exponent vector with entries in [0, bound].
inline std::vector<Exps> box(std::size_t n, monlink::Exponent bound) {
  std::vector<Exps> out;
  Exps e(n, 0);
  while (true) {
    out.push_back(e);
    std::size_t i = 0;
    while (i < n && e[i] == bound) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return out;
}

inline Exps mul(const Exps& a, const Exps& b) {
  Exps c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// Minimal elements of a set of exponent vectors.
inline std::vector<Exps> minimal(const std::vector<Exps>& ms) {
  std::vector<Exps> out;
  for (const auto& m : ms) {
    bool keep = true;
    for (const auto& o : ms) {
      if (o != m && divides(o, m)) {
        keep = false;
        break;
      }
    }
    if (keep && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Exps> sorted_generators(const monlink::MonomialIdeal& ideal) {
  auto g = generator_exps(ideal);
  std::sort(g.begin(), g.end());
  return g;
}

// Minimal generators of the monomial ideal whose members inside the box are
// exactly those satisfying `in`; valid when all true generators fit the box.
inline std::vector<Exps> ideal_from_predicate(std::size_t n, monlink::Exponent bound,
                                              const std::function<bool(const Exps&)>& in) {
  std::vector<Exps> members;
  for (const auto& m : box(n, bound)) {
    if (in(m)) members.push_back(m);
  }
  return minimal(members);
}

inline std::size_t height(const monlink::MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  std::size_t best = n + 1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool hits = true;
    for (const auto& g : ideal.generators()) {
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) any |= (s >> i & 1) && g[i] > 0;
      hits &= any;
    }
    if (hits) best = std::min<std::size_t>(best, std::popcount(s));
  }
  return best;
}

inline std::vector<std::uint64_t> minimal_primes(const monlink::MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  std::vector<std::uint64_t> covers;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool hits = true;
    for (const auto& g : ideal.generators()) hits &= (g.support_mask() & s) != 0;
    if (hits) covers.push_back(s);
  }
  std::vector<std::uint64_t> out;
  for (auto s : covers) {
    bool minimal_cover = true;
    for (auto o : covers) minimal_cover &= !(o != s && (o & ~s) == 0);
    if (minimal_cover) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ homology

// Reduced homology dims of the complex given by its full face list, as a map
// from dimension (-1, 0, ...) to rank.
inline std::map<int, std::size_t> reduced_homology(const std::vector<std::uint64_t>& faces, long long p) {
  std::map<int, std::vector<std::uint64_t>> by_dim;
  for (auto f : faces) by_dim[std::popcount(f) - 1].push_back(f);
  std::map<int, std::size_t> rank_of_boundary;  // d: C_d -> C_{d-1}
  for (const auto& [d, cells] : by_dim) {
    if (d < 0) continue;
    const auto& lower = by_dim[d - 1];
    if (lower.empty()) {
      rank_of_boundary[d] = 0;
      continue;
    }
    Dense m(lower.size(), std::vector<long long>(cells.size(), 0));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      int sign = 1;
      for (int v = 0; v < 64; ++v) {
        if (!(cells[c] >> v & 1)) continue;
        const auto face = cells[c] & ~(std::uint64_t{1} << v);
        const auto it = std::find(lower.begin(), lower.end(), face);
        m[static_cast<std::size_t>(it - lower.begin())][c] = sign;
        sign = -sign;
      }
    }
    rank_of_boundary[d] = dense_rank(m, p);
  }
  std::map<int, std::size_t> out;
  for (const auto& [d, cells] : by_dim) {
    const std::size_t cycles = cells.size() - (d >= 0 ? rank_of_boundary[d] : 0);
    const std::size_t boundaries = rank_of_boundary.count(d + 1) ? rank_of_boundary[d + 1] : 0;
    if (cycles > boundaries) out[d] = cycles - boundaries;
  }
  return out;
}

// Hochster's formula summed over every vertex subset, for a squarefree ideal.
inline std::map<std::pair<int, int>, std::uint64_t> hochster_all_subsets(const monlink::MonomialIdeal& ideal,
                                                                         long long p) {
  const std::size_t n = ideal.num_vars();
  std::vector<std::uint64_t> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.support_mask());
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << n); ++sigma) {
    std::vector<std::uint64_t> faces;
    for (std::uint64_t f = sigma;; f = (f - 1) & sigma) {
      const bool face = std::none_of(gens.begin(), gens.end(), [&](std::uint64_t g) { return (g & ~f) == 0; });
      if (face) faces.push_back(f);
      if (f == 0) break;
    }
    if (faces.empty()) continue;
    const int size = std::popcount(sigma);
    for (const auto& [d, r] : reduced_homology(faces, p)) {
      out[{size - d - 1, size}] += r;
    }
  }
  return out;
}

// ------------------------------------------------------------ graphs

// Products of vertices along sequences of t distinct vertices forming a path.
inline std::vector<std::uint64_t> path_supports(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges,
                                                std::size_t t) {
  auto adjacent = [&](std::size_t u, std::size_t v) {
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
  };
  std::set<std::uint64_t> out;
  std::vector<std::size_t> seq;
  std::function<void()> extend = [&] {
    if (seq.size() == t) {
      std::uint64_t mask = 0;
      for (auto v : seq) mask |= std::uint64_t{1} << v;
      out.insert(mask);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
      if (!seq.empty() && !adjacent(seq.back(), v)) continue;
      seq.push_back(v);
      extend();
      seq.pop_back();
    }
  };
  extend();
  return {out.begin(), out.end()};
}

}  // namespace oracle
