#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monlink/exact_field.hpp"
#include "monlink/monomial.hpp"

namespace monlink {

/// Finite simplicial complex on vertices 0..n-1 (n <= 64), faces stored as
/// bitmasks. The void complex has no faces; the irrelevant complex is {∅}.
class SimplicialComplex {
 public:
  /// Throws std::invalid_argument unless `faces` is closed under subsets and
  /// only uses vertices below `num_vertices`.
  SimplicialComplex(std::size_t num_vertices, std::vector<std::uint64_t> faces);

  static SimplicialComplex void_complex(std::size_t num_vertices);
  static SimplicialComplex irrelevant(std::size_t num_vertices);
  /// Downward closure of the given facets.
  static SimplicialComplex from_facets(std::size_t num_vertices,
                                       const std::vector<std::uint64_t>& facets);

  std::size_t num_vertices() const { return num_vertices_; }
  /// Faces sorted by size, then numerically.
  const std::vector<std::uint64_t>& faces() const { return faces_; }
  bool is_void() const { return faces_.empty(); }
  bool contains(std::uint64_t face) const;
  /// Largest face size minus one; -2 for the void complex.
  int dimension() const;

  /// Faces contained in `vertex_mask`.
  SimplicialComplex induced(std::uint64_t vertex_mask) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);
  struct Trusted {};
  SimplicialComplex(Trusted, std::size_t num_vertices, std::vector<std::uint64_t> faces);

  std::size_t num_vertices_ = 0;
  std::vector<std::uint64_t> faces_;
};

/// Reduced homology dimensions; index d holds dim H̃_{d-1}, so index 0 is
/// dimension -1. Empty for the void complex.
using HomologyDims = std::vector<std::size_t>;

/// Faces are the supports F with x_F outside the ideal. Throws
/// std::invalid_argument for non-squarefree or unit ideals.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

/// Squarefree ideal generated by the minimal non-faces.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, const VariableSet& vars);

HomologyDims reduced_homology_dims(const SimplicialComplex& complex,
                                   const FieldSpec& field = FieldSpec::rationals());

/// Minimal vertex covers of the generator supports, as variable masks in
/// increasing numeric order.
std::vector<std::uint64_t> minimal_primes(const MonomialIdeal& ideal);

MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

}  // namespace monlink
