#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/invariants.hpp"
#include "graphpoly/pendant.hpp"
#include "json.hpp"

namespace graphpoly {

/// How T-u and T-v must be related.
enum class DeletionRelation {
  /// T-u isomorphic to T-v (pseudosimilar vertices).
  isomorphic,
  /// P_A(T-u) = P_A(T-v), enough for the characteristic-polynomial swap.
  cospectral,
};

/// Vertices u, v of a tree in different automorphism orbits whose deletions
/// are related as requested.
struct PseudosimilarPair {
  Graph tree;
  Vertex u = 0;
  Vertex v = 0;
  DeletionRelation relation = DeletionRelation::isomorphic;
};

inline constexpr std::size_t kPseudosimilarMaxOrder = 12;

/// Exhaustive scan of trees of order <= max_order; pairs listed by tree
/// (canonical order) and then by (u, v) with u < v.
std::vector<PseudosimilarPair> find_pseudosimilar_trees(std::size_t max_order,
                                                        DeletionRelation relation = DeletionRelation::isomorphic,
                                                        std::size_t jobs = 1);
/// Re-checks both defining conditions from scratch.
bool is_pseudosimilar(const PseudosimilarPair& pair);

enum class Construction { schwenk_swap, stem_toggle, p5_graft, xi_swap, clique_root_swap, search };
std::string_view construction_name(Construction c);
/// Throws DomainError for an unknown name.
Construction construction_from_name(std::string_view name);

struct MateCertificate {
  Graph g;
  Graph h;
  PolynomialId polynomial = PolynomialId::char_adj;
  Construction construction = Construction::search;
  bool equal = false;
  bool nonisomorphic = false;
  /// P(g).
  Polynomial value;
  /// Equalities implied by the construction and checked alongside, e.g. T and M for xi_swap.
  std::vector<std::pair<PolynomialId, bool>> implied;

  bool valid() const { return equal && nonisomorphic; }
};

nlohmann::json to_json(const MateCertificate& c);

/// Certificate from computing P on both graphs.
MateCertificate verify_mate(const Graph& g, const Graph& h, PolynomialId id,
                            Construction construction = Construction::search);

/// Re-roots the pendant copy of pair.tree at pair.u (occ must be a relaxed
/// occurrence of (pair.tree, pair.v)); certificate for char_adj.
MateCertificate schwenk_swap(const Graph& g, const PendantOccurrence& occ, const PseudosimilarPair& pair);
/// Same surgery for an isomorphic-deletion pair; certificate for covered_C
/// with implied xi_eq, tutte and match_M equalities.
MateCertificate xi_swap(const Graph& g, const PendantOccurrence& occ, const PseudosimilarPair& pair);

/// Deletes the edge between the first pair of adjacent stems (each keeping
/// a leaf other than its partner); nullopt when there is none.
std::optional<MateCertificate> stem_toggle(const Graph& g);

/// Adds the stem-stem edge inside a pendant P5 whose root is not a path end.
/// Throws DomainError if occ is not a pendant P5 or its root is an end vertex.
MateCertificate p5_graft_swap(const Graph& g, const PendantOccurrence& occ);
/// Position (1..5) of a P5 root: 3 is the middle.
RootedPendant p5_pendant(Vertex root_position = 3);
RootedPendant p5_hat_pendant(Vertex root_position = 3);

/// Re-roots a pendant P3 from an end vertex to its middle; certificate for clique.
MateCertificate clique_root_swap(const Graph& g, const PendantOccurrence& occ);

struct LaplacianCandidate {
  Graph tree;
  Vertex u = 0;
  Vertex v = 0;
  std::size_t hosts_verified = 0;
};

inline constexpr std::size_t kLaplacianSearchMaxOrder = 10;

/// Gadgets (S, u, v) whose pendant re-rooting preserved P_L on every host of
/// a battery (three fixed small hosts, then `hosts` seeded random ones).
/// Scans trees up to max_order, then all connected graphs up to min(max_order, 7).
/// Deduplicated by canonical form of the rooted pair; may be empty.
std::vector<LaplacianCandidate> laplacian_swap_search(std::size_t max_order, std::size_t hosts = 50,
                                                      std::uint64_t seed = 1, std::size_t jobs = 1);

}  // namespace graphpoly
