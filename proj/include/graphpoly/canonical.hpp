#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/polynomial.hpp"

namespace graphpoly {

/// Isomorphism-invariant form of a (multi)graph.
struct CanonicalForm {
  std::size_t order = 0;
  /// Edge list of the canonically relabelled graph, sorted.
  std::vector<Edge> edges;
  /// Vertex colours in canonical order (empty when uncoloured).
  std::vector<std::uint32_t> colors;
  Integer automorphism_count = 1;

  Graph graph() const { return Graph(order, edges); }

  /// Isomorphism classes compare by (order, colours, edges); the automorphism
  /// count is derived data and does not take part.
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.order == b.order && a.colors == b.colors && a.edges == b.edges;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.colors != b.colors) return a.colors < b.colors;
    return a.edges < b.edges;
  }
};

struct CanonicalLabeling {
  /// labels[v-1] is the canonical position (1-based) of vertex v.
  std::vector<Vertex> labels;
  /// Generators of the automorphism group, as maps v-1 -> image-1.
  std::vector<std::vector<Vertex>> generators;
  /// orbit[v-1] = least vertex (1-based) in the automorphism orbit of v.
  std::vector<Vertex> orbits;
  CanonicalForm form;
};

/// Canonical labelling by colour refinement plus individualization search
/// with automorphism pruning. Optional vertex colours are respected: only
/// colour-preserving relabellings are considered. Parallel edges and loops
/// are handled through edge multiplicities.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const std::uint32_t> colors = {});

CanonicalForm canonical_form(const Graph& g);

/// Compact byte string identifying the isomorphism class; used as memo key.
std::string canonical_key(const Graph& g);

/// The canonically relabelled graph.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Isomorphism of graphs with one distinguished vertex each.
bool are_isomorphic_rooted(const Graph& a, Vertex ra, const Graph& b, Vertex rb);

/// Search-tree node budget per canonical labelling; exceeding it throws ResourceError.
inline constexpr std::size_t kCanonicalNodeBudget = 2'000'000;

}  // namespace graphpoly
