#include "monlink/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace monlink {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty() && n > 0) labels_ = VariableSet::indexed("x", n).names();
  if (labels_.size() != n) throw std::invalid_argument("label count differs from vertex count");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate vertex label");
  }
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    edges_.insert({std::min(u, v), std::max(u, v)});
  }
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph Graph::complete(std::size_t n) {
  if (n < 1) throw std::invalid_argument("a complete graph needs a vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph Graph::path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("a path needs a vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph Graph::star(std::size_t leaves, std::size_t isolated) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(1 + leaves + isolated, edges);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

std::vector<std::size_t> Graph::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GraphClass classify(const Graph& g) {
  const std::size_t n = g.num_vertices();
  GraphClass c;
  c.edge_count = g.num_edges();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  bool acyclic = true;
  std::size_t components = n;
  for (auto [u, v] : g.edges()) {
    const std::size_t ru = find(u), rv = find(v);
    if (ru == rv) {
      acyclic = false;
    } else {
      parent[ru] = rv;
      --components;
    }
  }
  c.is_forest = acyclic;
  c.is_tree = acyclic && n > 0 && components == 1;
  c.is_complete = c.edge_count == n * (n - 1) / 2;

  bool all_degree_two = n >= 3;
  for (std::size_t v = 0; v < n && all_degree_two; ++v) all_degree_two = g.neighbours(v).size() == 2;
  c.is_cycle = all_degree_two && components == 1;

  const std::vector<Graph::Edge> edges(g.edges().begin(), g.edges().end());
  bool common_vertex = true;
  if (!edges.empty()) {
    const auto [a, b] = edges.front();
    const bool via_a = std::all_of(edges.begin(), edges.end(),
                                   [a = a](const Graph::Edge& e) { return e.first == a || e.second == a; });
    const bool via_b = std::all_of(edges.begin(), edges.end(),
                                   [b = b](const Graph::Edge& e) { return e.first == b || e.second == b; });
    common_vertex = via_a || via_b;
  }
  c.is_star_plus_isolated = common_vertex;

  for (std::size_t i = 0; i < edges.size() && !c.has_two_disjoint_edges; ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [x, y] = edges[j];
      if (a != x && a != y && b != x && b != y) {
        c.has_two_disjoint_edges = true;
        break;
      }
    }
  }
  for (auto [u, v] : edges) {
    for (std::size_t w = v + 1; w < n && !c.has_triangle; ++w) {
      c.has_triangle = g.adjacent(u, w) && g.adjacent(v, w);
    }
    if (c.has_triangle) break;
  }
  return c;
}

MonomialIdeal edge_ideal(const Graph& g) { return t_path_ideal(g, 2); }

MonomialIdeal t_path_ideal(const Graph& g, std::size_t t) {
  if (t < 2) throw std::invalid_argument("path ideals need t >= 2");
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t v = 0; v < n; ++v) adjacency[v] = g.neighbours(v);

  std::vector<Monomial> gens;
  std::vector<std::size_t> path;
  std::vector<bool> visited(n, false);
  // Each path is found once from each end; minimalization drops the repeat.
  auto extend = [&](auto&& self, std::size_t v) -> void {
    path.push_back(v);
    visited[v] = true;
    if (path.size() == t) {
      gens.push_back(Monomial::squarefree(n, path));
    } else {
      for (std::size_t w : adjacency[v]) {
        if (!visited[w]) self(self, w);
      }
    }
    visited[v] = false;
    path.pop_back();
  };
  for (std::size_t v = 0; v < n; ++v) extend(extend, v);
  return MonomialIdeal(g.variables(), std::move(gens));
}

MonomialIdeal complementary_edge_ideal(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 3) throw std::invalid_argument("complementary edge ideals need at least 3 vertices");
  if (g.num_edges() == 0) throw std::invalid_argument("complementary edge ideal of an edgeless graph");
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    std::vector<Exponent> e(n, 1);
    e[u] = 0;
    e[v] = 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(g.variables(), std::move(gens));
}

Graph suspension(const Graph& g, std::size_t t) {
  if (t < 2) throw std::invalid_argument("suspension needs t >= 2");
  const std::size_t n = g.num_vertices();
  const std::size_t tail = t - 1;
  std::vector<std::string> labels = g.labels();
  std::vector<Graph::Edge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= tail; ++j) {
      labels.push_back(g.labels()[i] + "_" + std::to_string(j));
      const std::size_t vertex = n + i * tail + (j - 1);
      edges.emplace_back(j == 1 ? i : vertex - 1, vertex);
    }
  }
  return Graph(n * t, edges, std::move(labels));
}

std::size_t suspension_base(std::size_t vertex, std::size_t base_vertices, std::size_t t) {
  if (vertex < base_vertices) return vertex;
  return (vertex - base_vertices) / (t - 1);
}

}  // namespace monlink
