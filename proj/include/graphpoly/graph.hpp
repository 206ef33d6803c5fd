#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace graphpoly {

/// Vertices are numbered 1..order.
using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u <= v. u == v is a loop.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Finite undirected multigraph on vertices 1..order; loops and parallel
/// edges allowed. The edge multiset is kept sorted, so equality is structural.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order) : order_(order) {}
  Graph(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const { return order_; }
  /// Number of edges counted with multiplicity.
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(Vertex a, Vertex b);
  /// Adds a new isolated vertex and returns its number.
  Vertex add_vertex();

  bool has_vertex(Vertex v) const { return v >= 1 && v <= order_; }
  bool has_edge(Vertex a, Vertex b) const { return multiplicity(a, b) > 0; }
  std::size_t multiplicity(Vertex a, Vertex b) const;
  /// Degree with loops counted twice.
  std::size_t degree(Vertex v) const;
  /// Distinct neighbours other than v itself, ascending.
  std::vector<Vertex> neighbors(Vertex v) const;

  bool has_loops() const;
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

  /// adjacency()[i][j] = multiplicity of {i+1, j+1}; loops on the diagonal.
  std::vector<std::vector<std::uint32_t>> adjacency() const;
  /// Bit j of mask i set iff i+1 and j+1 are adjacent (loops ignored). order <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
};

std::ostream& operator<<(std::ostream& os, const Graph& g);

// ---- constructors for named graphs ----
Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// K_{1,leaves}; the centre is vertex 1.
Graph star_graph(std::size_t leaves);

// ---- structural operations; results renumbered to 1..n' keeping relative order ----
Graph delete_edge(const Graph& g, Edge e);
/// Merges e.v into e.u. Remaining copies of e become loops on the merged vertex.
Graph contract_edge(const Graph& g, Edge e);
/// Removes both endpoints of e together with all incident edges.
Graph extract_edge(const Graph& g, Edge e);
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_vertices(const Graph& g, std::span<const Vertex> vs);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Identifies v_g with v_h; h's vertices follow g's, v_h becomes v_g.
Graph one_point_join(const Graph& g, Vertex v_g, const Graph& h, Vertex v_h);
/// Disjoint union plus the edge {v_g, v_h}.
Graph bridge_join(const Graph& g, Vertex v_g, const Graph& h, Vertex v_h);
/// Loopless complement of the underlying simple graph.
Graph complement(const Graph& g);
/// Relabels vertex i to perm[i-1] (perm is a permutation of 1..n).
Graph permute(const Graph& g, std::span<const Vertex> perm);
/// Drops loops and collapses parallel edges.
Graph underlying_simple(const Graph& g);

// ---- predicates and counts ----
std::size_t connected_components(const Graph& g);
/// Components containing at least one edge (a loop counts).
std::size_t covered_components(const Graph& g);
/// Vertex sets of the components, each ascending, ordered by least vertex.
std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
/// True iff removing one copy of e disconnects its endpoints.
bool is_bridge(const Graph& g, Edge e);

}  // namespace graphpoly
