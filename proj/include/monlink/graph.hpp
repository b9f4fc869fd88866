#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monlink/monomial.hpp"

namespace monlink {

/// Finite simple graph on vertices 0..n-1 with unique labels.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  /// Labels default to x1..xn. Throws std::invalid_argument on loops,
  /// out-of-range endpoints or duplicate labels; repeated edges collapse.
  Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);
  /// Path on n vertices.
  static Graph path(std::size_t n);
  /// Centre x1 joined to `leaves` vertices, followed by `isolated` vertices.
  static Graph star(std::size_t leaves, std::size_t isolated = 0);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  /// Edges as (smaller, larger) endpoint pairs in sorted order.
  const std::set<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> neighbours(std::size_t v) const;

  VariableSet variables() const { return VariableSet(labels_); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> labels_;
  std::set<Edge> edges_;
};

struct GraphClass {
  bool is_forest = false;
  bool is_tree = false;
  bool is_complete = false;
  bool is_cycle = false;
  /// All edges share a vertex; edgeless graphs qualify.
  bool is_star_plus_isolated = false;
  bool has_two_disjoint_edges = false;
  bool has_triangle = false;
  std::size_t edge_count = 0;
};

GraphClass classify(const Graph& g);

MonomialIdeal edge_ideal(const Graph& g);
/// One generator per simple path on t vertices; the zero ideal when there is
/// none. Throws std::invalid_argument for t < 2.
MonomialIdeal t_path_ideal(const Graph& g, std::size_t t);
/// Generators x_1...x_n / (x_i x_j) over the edges. Needs n >= 3 and an edge.
MonomialIdeal complementary_edge_ideal(const Graph& g);

/// G with a pendant path of t - 1 new vertices at every vertex. Vertex i keeps
/// index i; its path vertices x_{i,1}..x_{i,t-1} follow all base vertices,
/// labelled "<label>_<j>".
Graph suspension(const Graph& g, std::size_t t);
/// Base vertex of a vertex of suspension(g, t) where g has `base_vertices`.
std::size_t suspension_base(std::size_t vertex, std::size_t base_vertices, std::size_t t);

}  // namespace monlink
