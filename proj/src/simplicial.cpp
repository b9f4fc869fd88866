#include "monlink/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace monlink {

namespace {

bool face_order(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

void require_squarefree_proper(const MonomialIdeal& ideal, const char* what) {
  if (ideal.num_vars() > 64) throw std::invalid_argument(std::string(what) + ": more than 64 variables");
  if (!ideal.is_squarefree()) throw std::invalid_argument(std::string(what) + " needs a squarefree ideal");
  if (ideal.is_unit()) throw std::invalid_argument(std::string(what) + " needs a proper ideal");
}

}  // namespace

SimplicialComplex::SimplicialComplex(Trusted, std::size_t num_vertices,
                                     std::vector<std::uint64_t> faces)
    : num_vertices_(num_vertices), faces_(std::move(faces)) {}

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, std::vector<std::uint64_t> faces)
    : num_vertices_(num_vertices), faces_(std::move(faces)) {
  if (num_vertices_ > 64) throw std::invalid_argument("simplicial complex on more than 64 vertices");
  std::sort(faces_.begin(), faces_.end(), face_order);
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  const std::uint64_t allowed =
      num_vertices_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_vertices_) - 1;
  for (std::uint64_t f : faces_) {
    if (f & ~allowed) throw std::invalid_argument("face uses a vertex outside the vertex set");
    for (std::uint64_t rest = f; rest != 0; rest &= rest - 1) {
      if (!contains(f & ~(rest & -rest))) {
        throw std::invalid_argument("face family is not closed under subsets");
      }
    }
  }
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t num_vertices) {
  return SimplicialComplex(Trusted{}, num_vertices, {});
}

SimplicialComplex SimplicialComplex::irrelevant(std::size_t num_vertices) {
  return SimplicialComplex(Trusted{}, num_vertices, {0});
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t num_vertices,
                                                 const std::vector<std::uint64_t>& facets) {
  std::vector<std::uint64_t> faces;
  for (std::uint64_t facet : facets) {
    // Enumerate all submasks of the facet, including the empty face.
    std::uint64_t sub = facet;
    while (true) {
      faces.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  return SimplicialComplex(num_vertices, std::move(faces));
}

bool SimplicialComplex::contains(std::uint64_t face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  return std::popcount(faces_.back()) - 1;
}

SimplicialComplex SimplicialComplex::induced(std::uint64_t vertex_mask) const {
  std::vector<std::uint64_t> kept;
  for (std::uint64_t f : faces_) {
    if ((f & ~vertex_mask) == 0) kept.push_back(f);
  }
  return SimplicialComplex(Trusted{}, num_vertices_, std::move(kept));
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  require_squarefree_proper(ideal, "Stanley-Reisner complex");
  const std::size_t n = ideal.num_vars();
  std::vector<std::uint64_t> nonfaces;
  for (const auto& g : ideal.generators()) nonfaces.push_back(g.support_mask());

  // Depth-first growth of faces by increasing vertex index.
  std::vector<std::uint64_t> faces;
  std::vector<std::pair<std::uint64_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [face, next] = stack.back();
    stack.pop_back();
    faces.push_back(face);
    for (std::size_t v = next; v < n; ++v) {
      const std::uint64_t grown = face | std::uint64_t{1} << v;
      const bool blocked = std::any_of(nonfaces.begin(), nonfaces.end(), [&](std::uint64_t g) {
        return (g >> v & 1) && (g & ~grown) == 0;
      });
      if (!blocked) stack.emplace_back(grown, v + 1);
    }
  }
  std::sort(faces.begin(), faces.end(), face_order);
  return SimplicialComplex(SimplicialComplex::Trusted{}, n, std::move(faces));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, const VariableSet& vars) {
  if (vars.size() != complex.num_vertices()) {
    throw std::invalid_argument("variable count differs from the vertex count");
  }
  const std::size_t n = complex.num_vertices();
  if (complex.is_void()) return MonomialIdeal::unit(vars);
  // Minimal non-faces are a face plus one vertex whose every facet-deletion is a face.
  std::vector<Monomial> gens;
  for (std::uint64_t f : complex.faces()) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (f & bit) continue;
      // Only extend by vertices above the top of f to visit each candidate once
      // from its largest-vertex deletion.
      if (f != 0 && static_cast<std::size_t>(std::bit_width(f)) > v + 1) continue;
      const std::uint64_t candidate = f | bit;
      if (complex.contains(candidate)) continue;
      bool minimal = true;
      for (std::uint64_t rest = candidate; rest != 0 && minimal; rest &= rest - 1) {
        minimal = complex.contains(candidate & ~(rest & -rest));
      }
      if (minimal) gens.push_back(Monomial::from_mask(n, candidate));
    }
  }
  return MonomialIdeal(vars, std::move(gens));
}

HomologyDims reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field) {
  if (complex.is_void()) return {};
  const int top = complex.dimension();
  // by_size[k] lists the faces with k vertices (dimension k - 1).
  std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(top) + 2);
  for (std::uint64_t f : complex.faces()) by_size[std::popcount(f)].push_back(f);

  // ranks[k] = rank of the boundary map from k-vertex faces to (k-1)-vertex faces.
  std::vector<std::size_t> ranks(by_size.size() + 1, 0);
  for (std::size_t k = 1; k < by_size.size(); ++k) {
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    index.reserve(by_size[k - 1].size());
    for (std::size_t i = 0; i < by_size[k - 1].size(); ++i) {
      index.emplace(by_size[k - 1][i], static_cast<std::uint32_t>(i));
    }
    SparseMatrix boundary(by_size[k].size(), by_size[k - 1].size());
    for (std::size_t r = 0; r < by_size[k].size(); ++r) {
      const std::uint64_t f = by_size[k][r];
      std::int64_t sign = 1;
      for (std::uint64_t rest = f; rest != 0; rest &= rest - 1) {
        boundary.set(r, index.at(f & ~(rest & -rest)), sign);
        sign = -sign;
      }
    }
    ranks[k] = rank(boundary, field);
  }
  HomologyDims dims(by_size.size());
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    dims[k] = by_size[k].size() - ranks[k] - ranks[k + 1];
  }
  return dims;
}

std::vector<std::uint64_t> minimal_primes(const MonomialIdeal& ideal) {
  require_squarefree_proper(ideal, "minimal primes");
  if (ideal.is_zero()) throw std::invalid_argument("minimal primes of the zero ideal");
  // Berge's sequential transversal construction with minimality pruning.
  std::vector<std::uint64_t> covers{0};
  for (const auto& g : ideal.generators()) {
    const std::uint64_t edge = g.support_mask();
    std::vector<std::uint64_t> next;
    for (std::uint64_t c : covers) {
      if (c & edge) {
        next.push_back(c);
      } else {
        for (std::uint64_t rest = edge; rest != 0; rest &= rest - 1) {
          next.push_back(c | (rest & -rest));
        }
      }
    }
    std::sort(next.begin(), next.end(), face_order);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    covers.clear();
    for (std::uint64_t c : next) {
      const bool redundant = std::any_of(covers.begin(), covers.end(),
                                         [&](std::uint64_t kept) { return (kept & ~c) == 0; });
      if (!redundant) covers.push_back(c);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  std::vector<Monomial> gens;
  for (std::uint64_t prime : minimal_primes(ideal)) gens.push_back(Monomial::from_mask(n, prime));
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

}  // namespace monlink
