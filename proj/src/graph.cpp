#include "graphpoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphpoly/errors.hpp"

namespace graphpoly {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v))
    throw DomainError("vertex " + std::to_string(v) + " not in graph of order " +
                      std::to_string(g.order()));
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

// Keeps the vertices with keep[v-1] set, renumbering them 1..k in order.
Graph restrict_to(const Graph& g, const std::vector<bool>& keep) {
  std::vector<Vertex> renum(g.order() + 1, 0);
  Vertex next = 0;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (keep[v - 1]) renum[v] = ++next;
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (keep[e.u - 1] && keep[e.v - 1]) edges.emplace_back(renum[e.u], renum[e.v]);
  return Graph(next, std::move(edges));
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '{' << e.u << ',' << e.v << '}';
}

Graph::Graph(std::size_t order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  for (const auto& e : edges_)
    if (e.u < 1 || e.v > order_)
      throw DomainError("edge endpoint outside 1.." + std::to_string(order_));
  std::sort(edges_.begin(), edges_.end());
}

void Graph::add_edge(Vertex a, Vertex b) {
  require_vertex(*this, a);
  require_vertex(*this, b);
  Edge e(a, b);
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

Vertex Graph::add_vertex() { return static_cast<Vertex>(++order_); }

std::size_t Graph::multiplicity(Vertex a, Vertex b) const {
  Edge e(a, b);
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
  return static_cast<std::size_t>(hi - lo);
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& e : edges_) {
    if (e.is_loop()) continue;
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Graph::has_parallel_edges() const {
  return std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end();
}

std::vector<std::vector<std::uint32_t>> Graph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> a(order_, std::vector<std::uint32_t>(order_, 0));
  for (const auto& e : edges_) {
    ++a[e.u - 1][e.v - 1];
    if (!e.is_loop()) ++a[e.v - 1][e.u - 1];
  }
  return a;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (order_ > 64) throw ResourceError("bitset adjacency limited to 64 vertices");
  std::vector<std::uint64_t> m(order_, 0);
  for (const auto& e : edges_) {
    if (e.is_loop()) continue;
    m[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
    m[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
  os << "Graph(" << g.order() << "; ";
  for (std::size_t i = 0; i < g.edges().size(); ++i) os << (i ? " " : "") << g.edges()[i];
  return os << ')';
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) es.emplace_back(i, j);
  return Graph(n, std::move(es));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, std::move(es));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(1, static_cast<Vertex>(n));
  return g;
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> es;
  for (Vertex i = 2; i <= leaves + 1; ++i) es.emplace_back(1, i);
  return Graph(leaves + 1, std::move(es));
}

Graph delete_edge(const Graph& g, Edge e) {
  auto edges = g.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) throw NoSuchEdgeError("no such edge");
  edges.erase(it);
  return Graph(g.order(), std::move(edges));
}

Graph contract_edge(const Graph& g, Edge e) {
  if (g.multiplicity(e.u, e.v) == 0) throw NoSuchEdgeError("no such edge");
  if (e.is_loop()) throw DomainError("cannot contract a loop");
  auto map = [&](Vertex x) -> Vertex {
    if (x == e.v) x = e.u;
    return x > e.v ? x - 1 : x;
  };
  std::vector<Edge> edges;
  bool removed = false;
  for (const auto& f : g.edges()) {
    if (!removed && f == e) {
      removed = true;
      continue;
    }
    edges.emplace_back(map(f.u), map(f.v));
  }
  return Graph(g.order() - 1, std::move(edges));
}

Graph extract_edge(const Graph& g, Edge e) {
  if (g.multiplicity(e.u, e.v) == 0) throw NoSuchEdgeError("no such edge");
  std::vector<bool> keep(g.order(), true);
  keep[e.u - 1] = false;
  keep[e.v - 1] = false;
  return restrict_to(g, keep);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  const Vertex one[] = {v};
  return delete_vertices(g, one);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> vs) {
  std::vector<bool> keep(g.order(), true);
  for (auto v : vs) {
    require_vertex(g, v);
    keep[v - 1] = false;
  }
  return restrict_to(g, keep);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  std::vector<bool> keep(g.order(), false);
  for (auto v : vs) {
    require_vertex(g, v);
    keep[v - 1] = true;
  }
  return restrict_to(g, keep);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  const auto off = static_cast<Vertex>(g.order());
  for (const auto& e : h.edges()) edges.emplace_back(e.u + off, e.v + off);
  return Graph(g.order() + h.order(), std::move(edges));
}

Graph one_point_join(const Graph& g, Vertex v_g, const Graph& h, Vertex v_h) {
  require_vertex(g, v_g);
  require_vertex(h, v_h);
  auto map = [&](Vertex x) -> Vertex {
    if (x == v_h) return v_g;
    return static_cast<Vertex>(g.order()) + (x < v_h ? x : x - 1);
  };
  auto edges = g.edges();
  for (const auto& e : h.edges()) edges.emplace_back(map(e.u), map(e.v));
  return Graph(g.order() + h.order() - 1, std::move(edges));
}

Graph bridge_join(const Graph& g, Vertex v_g, const Graph& h, Vertex v_h) {
  require_vertex(g, v_g);
  require_vertex(h, v_h);
  Graph u = disjoint_union(g, h);
  u.add_edge(v_g, static_cast<Vertex>(g.order()) + v_h);
  return u;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= g.order(); ++i)
    for (Vertex j = i + 1; j <= g.order(); ++j)
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
  return Graph(g.order(), std::move(edges));
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw DomainError("permutation size mismatch");
  std::vector<bool> seen(g.order(), false);
  for (auto p : perm) {
    if (p < 1 || p > g.order() || seen[p - 1]) throw DomainError("not a permutation");
    seen[p - 1] = true;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.u - 1], perm[e.v - 1]);
  return Graph(g.order(), std::move(edges));
}

Graph underlying_simple(const Graph& g) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (!e.is_loop() && (edges.empty() || edges.back() != e)) edges.push_back(e);
  return Graph(g.order(), std::move(edges));
}

std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g) {
  UnionFind uf(g.order());
  for (const auto& e : g.edges()) uf.unite(e.u - 1, e.v - 1);
  std::vector<std::vector<Vertex>> comps;
  std::vector<std::size_t> slot(g.order(), SIZE_MAX);
  for (Vertex v = 1; v <= g.order(); ++v) {
    const auto r = uf.find(v - 1);
    if (slot[r] == SIZE_MAX) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

std::size_t connected_components(const Graph& g) {
  UnionFind uf(g.order());
  std::size_t k = g.order();
  for (const auto& e : g.edges())
    if (uf.unite(e.u - 1, e.v - 1)) --k;
  return k;
}

std::size_t covered_components(const Graph& g) {
  std::vector<bool> touched(g.order(), false);
  for (const auto& e : g.edges()) touched[e.u - 1] = touched[e.v - 1] = true;
  const auto isolated =
      static_cast<std::size_t>(std::count(touched.begin(), touched.end(), false));
  return connected_components(g) - isolated;
}

bool is_connected(const Graph& g) { return connected_components(g) <= 1; }

bool is_forest(const Graph& g) {
  UnionFind uf(g.order());
  for (const auto& e : g.edges())
    if (!uf.unite(e.u - 1, e.v - 1)) return false;
  return true;
}

bool is_tree(const Graph& g) { return g.order() >= 1 && is_forest(g) && is_connected(g); }

bool is_bridge(const Graph& g, Edge e) {
  if (g.multiplicity(e.u, e.v) == 0) throw NoSuchEdgeError("no such edge");
  if (e.is_loop()) return false;
  UnionFind uf(g.order());
  bool skipped = false;
  for (const auto& f : g.edges()) {
    if (!skipped && f == e) {
      skipped = true;
      continue;
    }
    uf.unite(f.u - 1, f.v - 1);
  }
  return uf.find(e.u - 1) != uf.find(e.v - 1);
}

}  // namespace graphpoly
