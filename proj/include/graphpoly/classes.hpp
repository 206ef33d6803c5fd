#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "graphpoly/graph.hpp"

namespace graphpoly {

/// Planarity of the underlying simple graph (loops and parallel edges do not
/// affect planarity).
bool is_planar(const Graph& g);

enum class GraphClass { all, forests, trees, planar };

/// A decidable graph class with a membership test and an isomorph-free
/// enumerator. Every class here except `trees` is closed under vertex
/// deletion, which the generator relies on for pruning.
struct ClassSpec {
  GraphClass kind = GraphClass::all;
  std::string name;
  /// Largest order the internal enumerator accepts.
  std::size_t max_order = 0;

  bool contains(const Graph& g) const;
};

/// Looks up "all", "forests", "trees" or "planar"; throws DomainError otherwise.
ClassSpec class_spec(std::string_view name);
std::vector<std::string> class_names();

/// Pairwise non-isomorphic representatives of every member of order n,
/// canonically labelled and sorted by canonical form. Generated by canonical
/// augmentation (vertex addition with canonical-deletion acceptance; trees
/// grow by leaves).
/// Throws ResourceError above spec.max_order.
std::vector<Graph> enumerate_class(const ClassSpec& spec, std::size_t n, std::size_t jobs = 1);

/// Members of order n with at most max_edges edges. Capping the size keeps
/// the class closed under vertex deletion, so the same generator applies and
/// the order budget is relaxed to kSparseMaxOrder.
inline constexpr std::size_t kSparseMaxOrder = 12;
inline constexpr std::size_t kSparseMaxEdges = 11;
std::vector<Graph> enumerate_class_sparse(const ClassSpec& spec, std::size_t n, std::size_t max_edges,
                                          std::size_t jobs = 1);

/// Keeps the graphs that belong to spec, deduplicated up to isomorphism and
/// canonically labelled and sorted like enumerate_class. For graph6 input
/// produced by external generators beyond the internal budgets.
std::vector<Graph> canonical_members(const ClassSpec& spec, const std::vector<Graph>& graphs,
                                     std::size_t jobs = 1);

}  // namespace graphpoly
