#pragma once

#include <vector>

#include "graphpoly/graph.hpp"

namespace graphpoly {

/// A connected simple graph with a distinguished root vertex.
struct RootedPendant {
  Graph graph;
  Vertex root = 1;
};

/// Validating constructor: throws DomainError unless graph is connected and
/// simple and root is one of its vertices.
RootedPendant make_pendant(Graph graph, Vertex root);

/// A witness set W inducing a copy of the pendant graph, joined to the rest of
/// the host by a single edge {root, host_vertex} with root in W.
struct PendantOccurrence {
  std::vector<Vertex> witness;  // ascending
  Vertex root = 0;
  Vertex host_vertex = 0;

  Edge crossing_edge() const { return Edge(root, host_vertex); }
  friend bool operator==(const PendantOccurrence&, const PendantOccurrence&) = default;
};

enum class PendantMatch {
  /// The root is min(W) and the increasing bijection {1..h} -> W must be an
  /// isomorphism onto G[W]; the pendant's own root field is not consulted.
  labeled_exact,
  /// Some isomorphism onto G[W] maps the pendant root to the crossing-edge endpoint.
  relaxed,
};

/// All pendant occurrences of p in g, ordered by witness set. Requires g
/// simple and order(g) > order(p.graph); throws DomainError otherwise.
std::vector<PendantOccurrence> find_pendant_occurrences(const Graph& g, const RootedPendant& p,
                                                        PendantMatch mode = PendantMatch::labeled_exact);

/// core plus a copy of p.graph, joined by the edge {attach, root}. The copy
/// occupies vertices order(core)+1 .. order(core)+order(p.graph).
Graph graft_pendant(const Graph& core, Vertex attach, const RootedPendant& p);

/// Removes the witness set of occ and grafts q at the former host endpoint,
/// q.root carrying the crossing edge. Throws ConsistencyError if occ no longer
/// describes a pendant set of g.
Graph replace_pendant(const Graph& g, const PendantOccurrence& occ, const RootedPendant& q);

/// Checks the structural part of an occurrence: W connected, and the crossing
/// edge is the only edge leaving W.
bool is_valid_occurrence(const Graph& g, const PendantOccurrence& occ);

}  // namespace graphpoly
