#include "graphpoly/classes.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "graphpoly/canonical.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/parallel.hpp"

namespace graphpoly {

bool is_planar(const Graph& g) {
  const Graph s = underlying_simple(g);
  const auto n = s.order();
  if (n >= 3 && s.size() > 3 * n - 6) return false;
  if (n <= 4) return true;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(n);
  for (const auto& e : s.edges()) boost::add_edge(e.u - 1, e.v - 1, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool ClassSpec::contains(const Graph& g) const {
  switch (kind) {
    case GraphClass::all:
      return g.is_simple();
    case GraphClass::forests:
      return g.is_simple() && is_forest(g);
    case GraphClass::trees:
      return g.is_simple() && is_tree(g);
    case GraphClass::planar:
      return g.is_simple() && is_planar(g);
  }
  return false;
}

ClassSpec class_spec(std::string_view name) {
  if (name == "all") return {GraphClass::all, "all", 9};
  if (name == "forests") return {GraphClass::forests, "forests", 14};
  if (name == "trees") return {GraphClass::trees, "trees", 14};
  if (name == "planar") return {GraphClass::planar, "planar", 9};
  throw DomainError("unknown graph class '" + std::string(name) +
                    "' (expected all, forests, trees or planar)");
}

std::vector<std::string> class_names() { return {"all", "forests", "trees", "planar"}; }

namespace {

// Calls fn(mask) for every neighbourhood of a new vertex that keeps the child
// inside the (vertex-deletion closed) generating class.
template <typename Fn>
void for_each_attachment(const Graph& parent, GraphClass kind, Fn&& fn) {
  const auto m = parent.order();
  if (kind == GraphClass::trees) {
    // a new leaf (or the first vertex)
    if (m == 0) fn(0);
    for (std::size_t v = 0; v < m; ++v) fn(std::uint64_t{1} << v);
    return;
  }
  if (kind == GraphClass::forests) {
    // at most one neighbour per component
    const auto comps = component_vertex_sets(parent);
    std::vector<std::uint64_t> masks{0};
    for (const auto& c : comps) {
      std::vector<std::uint64_t> next;
      for (auto base : masks) {
        next.push_back(base);
        for (auto v : c) next.push_back(base | (std::uint64_t{1} << (v - 1)));
      }
      masks = std::move(next);
    }
    for (auto mask : masks) fn(mask);
    return;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) fn(mask);
}

std::vector<Graph> children_of(const Graph& parent, GraphClass kind, std::size_t max_edges) {
  const auto m = parent.order();
  const auto child_order = m + 1;
  const auto new_vertex = static_cast<Vertex>(child_order);
  std::vector<std::size_t> deg(m);
  for (Vertex v = 1; v <= m; ++v) deg[v - 1] = parent.degree(v);

  std::set<std::vector<Edge>> seen;
  std::vector<Graph> out;
  for_each_attachment(parent, kind, [&](std::uint64_t mask) {
    const auto new_degree = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (parent.size() + new_degree > max_edges) return;
    // trees delete a leaf, every other class a vertex of maximum degree
    if (kind != GraphClass::trees)
      for (std::size_t v = 0; v < m; ++v) {
        const auto d = deg[v] + ((mask >> v) & 1U);
        if (d > new_degree) return;
      }
    Graph child = parent;
    child.add_vertex();
    for (std::size_t v = 0; v < m; ++v)
      if ((mask >> v) & 1U) child.add_edge(static_cast<Vertex>(v + 1), new_vertex);
    if (kind == GraphClass::planar && !is_planar(child)) return;

    const auto lab = canonical_labeling(child);
    Vertex chosen = 0;
    for (Vertex v = 1; v <= child_order; ++v) {
      const auto d = v == new_vertex ? new_degree : deg[v - 1] + ((mask >> (v - 1)) & 1U);
      if (d != new_degree) continue;
      if (chosen == 0 || lab.labels[v - 1] > lab.labels[chosen - 1]) chosen = v;
    }
    if (lab.orbits[chosen - 1] != lab.orbits[new_vertex - 1]) return;
    if (seen.insert(lab.form.edges).second) out.push_back(lab.form.graph());
  });
  return out;
}

bool by_canonical_edges(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.edges() < b.edges();
}

std::vector<Graph> generate(const ClassSpec& spec, std::size_t n, std::size_t max_edges, std::size_t jobs) {
  if (n == 0) return spec.kind == GraphClass::trees ? std::vector<Graph>{} : std::vector<Graph>{Graph(0)};
  std::vector<Graph> level{Graph(0)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::vector<Graph>> per_parent(level.size());
    parallel_for(level.size(), jobs,
                 [&](std::size_t i) { per_parent[i] = children_of(level[i], spec.kind, max_edges); });
    std::vector<Graph> next;
    for (auto& c : per_parent)
      for (auto& g : c) next.push_back(std::move(g));
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), by_canonical_edges);
  return level;
}

}  // namespace

std::vector<Graph> enumerate_class(const ClassSpec& spec, std::size_t n, std::size_t jobs) {
  if (n > spec.max_order)
    throw ResourceError("enumeration of class '" + spec.name + "' at order " + std::to_string(n) +
                        " exceeds the internal budget (max " + std::to_string(spec.max_order) +
                        "); generate the graphs externally and pass them as graph6 input");
  return generate(spec, n, std::numeric_limits<std::size_t>::max(), jobs);
}

std::vector<Graph> enumerate_class_sparse(const ClassSpec& spec, std::size_t n, std::size_t max_edges,
                                          std::size_t jobs) {
  if (n > spec.max_order && (n > kSparseMaxOrder || max_edges > kSparseMaxEdges))
    throw ResourceError("sparse enumeration of class '" + spec.name + "' at order " + std::to_string(n) +
                        " with up to " + std::to_string(max_edges) + " edges exceeds the internal budget (order " +
                        std::to_string(kSparseMaxOrder) + ", " + std::to_string(kSparseMaxEdges) +
                        " edges); generate the graphs externally and pass them as graph6 input");
  return generate(spec, n, max_edges, jobs);
}

std::vector<Graph> canonical_members(const ClassSpec& spec, const std::vector<Graph>& graphs,
                                     std::size_t jobs) {
  std::vector<std::optional<Graph>> canon(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    if (spec.contains(graphs[i])) canon[i] = canonical_graph(graphs[i]);
  });
  std::vector<Graph> out;
  for (auto& g : canon)
    if (g) out.push_back(std::move(*g));
  std::sort(out.begin(), out.end(), by_canonical_edges);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace graphpoly
