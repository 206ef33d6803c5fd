#include "graphpoly/pendant.hpp"

#include <algorithm>
#include <string>

#include "graphpoly/canonical.hpp"
#include "graphpoly/errors.hpp"

namespace graphpoly {

namespace {

// Vertices reachable from start without traversing the edge {start, blocked}.
std::vector<Vertex> side_of(const Graph& g, const std::vector<std::vector<Vertex>>& adj, Vertex start,
                            Vertex blocked) {
  std::vector<bool> seen(g.order() + 1, false);
  std::vector<Vertex> stack{start};
  std::vector<Vertex> out;
  seen[start] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (auto u : adj[v]) {
      if (v == start && u == blocked) continue;
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RootedPendant make_pendant(Graph graph, Vertex root) {
  if (!graph.has_vertex(root)) throw DomainError("pendant root is not a vertex");
  if (!graph.is_simple()) throw DomainError("pendant graph must be simple");
  if (!is_connected(graph)) throw DomainError("pendant graph must be connected");
  return RootedPendant{std::move(graph), root};
}

std::vector<PendantOccurrence> find_pendant_occurrences(const Graph& g, const RootedPendant& p,
                                                        PendantMatch mode) {
  const auto h = p.graph.order();
  if (!g.is_simple()) throw DomainError("pendant search requires a simple host");
  if (h >= g.order())
    throw DomainError("pendant order " + std::to_string(h) + " must be below host order " +
                      std::to_string(g.order()));
  std::vector<std::vector<Vertex>> adj(g.order() + 1);
  for (Vertex v = 1; v <= g.order(); ++v) adj[v] = g.neighbors(v);

  std::vector<PendantOccurrence> out;
  for (const auto& e : g.edges()) {
    for (auto [r, w] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      auto W = side_of(g, adj, r, w);
      if (W.size() != h || std::binary_search(W.begin(), W.end(), w)) continue;
      const auto induced = induced_subgraph(g, W);
      bool match = false;
      if (mode == PendantMatch::labeled_exact) {
        match = r == W.front() && induced == p.graph;
      } else {
        const auto local_root =
            static_cast<Vertex>(std::lower_bound(W.begin(), W.end(), r) - W.begin() + 1);
        match = are_isomorphic_rooted(induced, local_root, p.graph, p.root);
      }
      if (match) out.push_back({std::move(W), r, w});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.witness < b.witness; });
  return out;
}

Graph graft_pendant(const Graph& core, Vertex attach, const RootedPendant& p) {
  if (!core.has_vertex(attach)) throw DomainError("attachment vertex not in core");
  if (!p.graph.has_vertex(p.root)) throw DomainError("pendant root is not a vertex");
  return bridge_join(core, attach, p.graph, p.root);
}

bool is_valid_occurrence(const Graph& g, const PendantOccurrence& occ) {
  const auto& W = occ.witness;
  if (W.empty() || !std::is_sorted(W.begin(), W.end()) ||
      std::adjacent_find(W.begin(), W.end()) != W.end())
    return false;
  if (W.front() < 1 || W.back() > g.order() || !g.has_vertex(occ.host_vertex)) return false;
  const auto in_w = [&](Vertex v) { return std::binary_search(W.begin(), W.end(), v); };
  if (!in_w(occ.root) || in_w(occ.host_vertex)) return false;
  std::size_t leaving = 0;
  for (const auto& e : g.edges()) {
    if (in_w(e.u) == in_w(e.v)) continue;
    ++leaving;
    if (e != occ.crossing_edge()) return false;
  }
  return leaving == 1 && is_connected(induced_subgraph(g, W));
}

Graph replace_pendant(const Graph& g, const PendantOccurrence& occ, const RootedPendant& q) {
  if (!is_valid_occurrence(g, occ)) throw ConsistencyError("stale pendant occurrence");
  const auto below = static_cast<Vertex>(
      std::lower_bound(occ.witness.begin(), occ.witness.end(), occ.host_vertex) - occ.witness.begin());
  const auto rest = delete_vertices(g, occ.witness);
  return graft_pendant(rest, occ.host_vertex - below, q);
}

}  // namespace graphpoly
