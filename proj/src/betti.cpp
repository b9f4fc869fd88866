#include "monlink/betti.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <tuple>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "monlink/polarization.hpp"
#include "monlink/simplicial.hpp"

namespace monlink {

void BettiTable::add(int i, int j, std::uint64_t count) {
  if (count == 0) return;
  entries_[{i, j}] += count;
}

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(int i) const {
  std::uint64_t sum = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i) sum += value;
  }
  return sum;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, value] : entries_) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [key, value] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

std::string BettiTable::diagram() const {
  const int pd = projective_dimension();
  const int reg = regularity();
  std::vector<std::string> labels{"", "total:"};
  std::vector<std::string> header, totals;
  for (int i = 0; i <= pd; ++i) {
    header.push_back(std::to_string(i));
    totals.push_back(std::to_string(total(i)));
  }
  std::vector<std::vector<std::string>> rows{header, totals};
  for (int r = 0; r <= reg; ++r) {
    labels.push_back(std::to_string(r) + ":");
    std::vector<std::string> row;
    for (int i = 0; i <= pd; ++i) {
      const std::uint64_t v = at(i, i + r);
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    rows.push_back(std::move(row));
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(static_cast<std::size_t>(pd) + 1, 1);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << std::string(label_width - labels[r].size(), ' ') << labels[r];
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      out << ' ' << std::string(widths[c] - rows[r][c].size(), ' ') << rows[r][c];
    }
    out << '\n';
  }
  return out.str();
}

namespace {

using GradedCounts = std::map<BettiTable::Key, std::uint64_t>;

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("Betti table of the zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument("Betti table of the unit ideal");
}

// Betti numbers of one variable-connected block of a squarefree ideal
// (excluding beta_{0,0}).
GradedCounts hochster_block(std::size_t num_vars, const std::vector<std::uint64_t>& gens,
                            const FieldSpec& field) {
  std::uint64_t vertices = 0;
  for (std::uint64_t g : gens) vertices |= g;

  std::vector<std::uint64_t> lattice(gens.begin(), gens.end());
  std::unordered_set<std::uint64_t> seen(gens.begin(), gens.end());
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    for (std::uint64_t g : gens) {
      const std::uint64_t joined = lattice[k] | g;
      if (seen.insert(joined).second) lattice.push_back(joined);
    }
  }

  // Stanley-Reisner complex of the block, grown depth-first over its vertices.
  // Built only if some sigma is cheaper to handle directly than through the nerve.
  std::optional<SimplicialComplex> complex;
  auto stanley_reisner_complex = [&]() -> const SimplicialComplex& {
    if (complex) return *complex;
    std::vector<std::uint64_t> faces;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> stack{{0, vertices}};
    while (!stack.empty()) {
      auto [face, remaining] = stack.back();
      stack.pop_back();
      faces.push_back(face);
      for (std::uint64_t rest = remaining; rest != 0; rest &= rest - 1) {
        const std::uint64_t bit = rest & -rest;
        const std::uint64_t grown = face | bit;
        const bool blocked = std::any_of(gens.begin(), gens.end(), [&](std::uint64_t g) {
          return (g & bit) && (g & ~grown) == 0;
        });
        // Only vertices above `bit` may extend the new face.
        if (!blocked) stack.emplace_back(grown, remaining & ~((bit << 1) - 1));
      }
    }
    complex.emplace(num_vars, std::move(faces));
    return *complex;
  };

  GradedCounts counts;
  for (std::uint64_t sigma : lattice) {
    const int size = std::popcount(sigma);
    std::vector<std::uint64_t> below;
    for (std::uint64_t g : gens) {
      if ((g & ~sigma) == 0) below.push_back(g);
    }
    if (below.size() >= static_cast<std::size_t>(size)) {
      const HomologyDims dims = reduced_homology_dims(stanley_reisner_complex().induced(sigma), field);
      // dims[k] is H̃_{k-1}(Δ_σ); it contributes to beta_{|σ| - k, |σ|}.
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (dims[k] != 0) counts[{size - static_cast<int>(k), size}] += dims[k];
      }
      continue;
    }
    // Alexander duality inside σ turns Δ_σ into the complex with facets
    // σ \ g, whose nerve has the faces A with lcm(A) != σ. H̃_{j}(nerve)
    // then contributes to beta_{j+2, |σ|}.
    if (below.size() == 1 && below.front() == sigma) {
      counts[{1, size}] += 1;
      continue;
    }
    std::vector<std::uint64_t> nerve_faces;
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::size_t>> stack{{0, 0, 0}};
    while (!stack.empty()) {
      auto [face, joined, next] = stack.back();
      stack.pop_back();
      nerve_faces.push_back(face);
      for (std::size_t v = next; v < below.size(); ++v) {
        const std::uint64_t grown = joined | below[v];
        if (grown != sigma) stack.emplace_back(face | std::uint64_t{1} << v, grown, v + 1);
      }
    }
    const HomologyDims dims =
        reduced_homology_dims(SimplicialComplex(below.size(), std::move(nerve_faces)), field);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (dims[k] != 0) counts[{static_cast<int>(k) + 1, size}] += dims[k];
    }
  }
  return counts;
}

GradedCounts convolve(const GradedCounts& a, const GradedCounts& b) {
  GradedCounts out;
  for (const auto& [ka, va] : a) {
    for (const auto& [kb, vb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
  }
  return out;
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field) {
  require_proper_nonzero(ideal);
  const MonomialIdeal squarefree = ideal.is_squarefree() ? ideal : polarize(ideal);
  if (squarefree.num_vars() > variable_cap()) {
    throw VariableCapError(squarefree.num_vars(), variable_cap());
  }

  std::vector<std::uint64_t> gens;
  for (const auto& g : squarefree.generators()) gens.push_back(g.support_mask());

  // Group generators into blocks that share variables; S/(I1 + I2) for
  // ideals in disjoint variables resolves by the tensor product.
  std::vector<std::size_t> parent(gens.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] & gens[j]) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<std::uint64_t>> blocks;
  for (std::size_t i = 0; i < gens.size(); ++i) blocks[find(i)].push_back(gens[i]);

  GradedCounts combined{{{0, 0}, 1}};
  for (const auto& [root, block] : blocks) {
    GradedCounts part = hochster_block(squarefree.num_vars(), block, field);
    part[{0, 0}] = 1;
    combined = convolve(combined, part);
  }

  BettiTable table(ideal.num_vars(), field);
  for (const auto& [key, value] : combined) table.add(key.first, key.second, value);
  return table;
}

BettiTable taylor_oracle(const MonomialIdeal& ideal, const FieldSpec& field) {
  require_proper_nonzero(ideal);
  const std::size_t m = ideal.num_generators();
  if (m > kTaylorGeneratorLimit) {
    throw std::invalid_argument("Taylor oracle handles at most " +
                                std::to_string(kTaylorGeneratorLimit) + " generators, got " +
                                std::to_string(m));
  }
  const auto& gens = ideal.generators();
  const std::size_t subsets = std::size_t{1} << m;

  // lcm of every generator subset; subsets are grouped by their lcm.
  std::vector<Monomial> lcms(subsets);
  lcms[0] = Monomial::one(ideal.num_vars());
  std::map<Monomial, std::vector<std::uint32_t>> by_lcm;
  by_lcm[lcms[0]].push_back(0);
  for (std::size_t s = 1; s < subsets; ++s) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
    lcms[s] = lcm(lcms[s & (s - 1)], gens[low]);
    by_lcm[lcms[s]].push_back(static_cast<std::uint32_t>(s));
  }

  BettiTable table(ideal.num_vars(), field);
  for (const auto& [degree_monomial, members] : by_lcm) {
    // Within one multidegree the Taylor differential mod the maximal ideal
    // keeps a face F \ {j} exactly when it has the same lcm.
    std::map<int, std::vector<std::uint32_t>> by_size;
    for (std::uint32_t s : members) by_size[std::popcount(s)].push_back(s);
    std::map<int, std::size_t> ranks;
    for (const auto& [size, faces] : by_size) {
      auto lower = by_size.find(size - 1);
      if (lower == by_size.end()) continue;
      std::unordered_map<std::uint32_t, std::uint32_t> index;
      for (std::size_t i = 0; i < lower->second.size(); ++i) {
        index.emplace(lower->second[i], static_cast<std::uint32_t>(i));
      }
      SparseMatrix boundary(faces.size(), lower->second.size());
      for (std::size_t r = 0; r < faces.size(); ++r) {
        std::int64_t sign = 1;
        for (std::uint32_t rest = faces[r]; rest != 0; rest &= rest - 1) {
          auto it = index.find(faces[r] & ~(rest & -rest));
          if (it != index.end()) boundary.set(r, it->second, sign);
          sign = -sign;
        }
      }
      ranks[size] = rank(boundary, field);
    }
    const int degree = static_cast<int>(degree_monomial.degree());
    for (const auto& [size, faces] : by_size) {
      const std::size_t out = ranks.count(size) ? ranks[size] : 0;
      const std::size_t in = ranks.count(size + 1) ? ranks[size + 1] : 0;
      table.add(size, degree, faces.size() - out - in);
    }
  }
  return table;
}

Invariants invariants(const BettiTable& table, const MonomialIdeal& ideal) {
  Invariants inv;
  inv.pd = table.projective_dimension();
  inv.reg = table.regularity();
  inv.depth = static_cast<int>(ideal.num_vars()) - inv.pd;
  inv.height = height(ideal);
  inv.alpha = alpha(ideal);
  inv.is_cm = inv.pd == static_cast<int>(inv.height);
  inv.is_gorenstein = inv.is_cm && table.total(inv.pd) == 1;
  inv.has_linear_resolution =
      ideal.is_equigenerated() && inv.reg == static_cast<int>(inv.alpha) - 1;
  return inv;
}

unsigned reg_artinian_socle(const MonomialIdeal& ideal) {
  unsigned reg = 0;
  for (const auto& m : socle_monomials(ideal)) reg = std::max(reg, m.degree());
  return reg;
}

}  // namespace monlink
