#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphpoly/classes.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/polynomial.hpp"

namespace graphpoly {

enum class PolynomialId {
  char_adj,
  char_lap,
  dom,
  match_mu,
  match_g,
  match_M,
  indep,
  vcover,
  clique,
  covered_C,
  xi_eq,
  tutte,
  partition_Z,
  chromatic,
  gen_chromatic,
  euler,
  flow,
  reliability,
};

std::span<const PolynomialId> all_polynomial_ids();
std::string_view polynomial_name(PolynomialId id);
/// Throws DomainError for an unknown name.
PolynomialId polynomial_id(std::string_view name);
/// Declared variables, e.g. {"x","y","z"} for covered_C. A computed value uses
/// a subset of them (normal form drops variables that do not occur).
std::vector<std::string> polynomial_variables(PolynomialId id);
/// Dispatches to the primary algorithm for id.
Polynomial compute(PolynomialId id, const Graph& g);

// ---- characteristic polynomials (monic, det(xI - M)) ----

/// Division-free Berkowitz characteristic polynomial of a square integer
/// matrix, coefficients from x^n down to x^0.
std::vector<Integer> berkowitz(const std::vector<std::vector<Integer>>& m);
Polynomial char_poly_adjacency(const Graph& g);
Polynomial char_poly_laplacian(const Graph& g);
/// P_A(H) == P_A(g1) P_A(g2) - P_A(g1-v1) P_A(g2-v2) for H = bridge_join.
bool char_recurrence_check(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

// ---- domination ----

inline constexpr std::size_t kDominationMaxOrder = 24;
Polynomial domination_poly(const Graph& g);
/// Every dominating set as a vertex bitmask, ascending. Same budget.
std::vector<std::uint64_t> dominating_sets(const Graph& g);

// ---- matchings ----

/// m_0 .. m_floor(n/2). Loops never belong to a matching; parallel edges count separately.
std::vector<Integer> matching_counts(const Graph& g);
Polynomial matching_mu(const Graph& g);
Polynomial matching_g(const Graph& g);
/// M(G; w1, w2) = sum m_k w1^(n-2k) w2^k.
Polynomial matching_M(const Graph& g);

// ---- independence family (simple graphs, order <= 64) ----

Polynomial independence_poly(const Graph& g);
Polynomial clique_poly(const Graph& g);
Polynomial vertex_cover_poly(const Graph& g);

// ---- edge-subset expansions ----

inline constexpr std::size_t kSubsetMaxSize = 24;

/// Counts of spanning subgraphs (V, A) by (|A|, k(A), covered components),
/// plus the Eulerian ones by |A|. One pass serves C, Z, the Tutte subset
/// expansion and the Euler polynomial. Throws ResourceError above kSubsetMaxSize edges.
struct SubsetStatistics {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t components = 0;
  /// counts[a][k][c]
  std::vector<std::vector<std::vector<std::uint64_t>>> counts;
  /// eulerian[a]
  std::vector<std::uint64_t> eulerian;
};
SubsetStatistics subset_statistics(const Graph& g);

Polynomial covered_components_poly(const Graph& g);
Polynomial partition_Z(const Graph& g);
Polynomial euler_poly(const Graph& g);
/// Tutte polynomial from the rank-generating subset expansion.
Polynomial tutte_subset_expansion(const Graph& g);

// ---- recursions ----

/// Edge elimination polynomial by xi(G) = xi(G-e) + y xi(G/e) + z xi(G+e)
/// (extraction), multiplicative over components, memoised on canonical forms.
/// Loops are eliminated last by xi(G) = (1+y) xi(G-e) + z xi(G-v).
Polynomial xi_poly(const Graph& g);
/// Deletion-contraction Tutte polynomial, memoised on canonical forms.
Polynomial tutte_poly(const Graph& g);
/// Deletion-contraction on simple graphs, base x^n.
Polynomial chromatic_poly(const Graph& g);
/// (-1)^(n-k) x^k T(1-x, 0).
Polynomial chromatic_from_tutte(const Graph& g);
/// Counts generalized colourings on an integer grid and interpolates. order <= 8.
inline constexpr std::size_t kGenChromaticMaxOrder = 8;
Polynomial gen_chromatic_poly(const Graph& g);
/// Number of maps V -> Y+Z, |Y| = proper, |Y+Z| = total, with no edge monochromatic in Y.
Integer count_generalized_colorings(const Graph& g, std::size_t total, std::size_t proper);
/// (-1)^(m-n+k) T(0, 1-x).
Polynomial flow_poly(const Graph& g);
/// p^(m-n+k) (1-p)^(n-k) T(1, 1/p), p the edge failure probability.
Polynomial reliability_poly(const Graph& g);

enum class CrecCoefficients {
  /// xz C(H) = C1 C2 + x(z-1)(C1 C2' + C1' C2) + x^2 (1-z) C1' C2'
  standard,
  /// xz C(H) = (1+2z) C1 C2 - x(1+z)(C1 C2' + C1' C2) + x^2 (1+z) C1' C2'
  alternate,
};

/// One-point join identity for C with denominators cleared, where H joins g1
/// and g2 at v1 = v2 and Ci' = C(Gi - vi). The alternate coefficient set
/// is kept for comparison; it fails already for P3 = K2 . K2.
bool crec_join_check(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2,
                     CrecCoefficients form = CrecCoefficients::standard);

// ---- memoisation ----

/// Entry cap of the shared recursion memo (LRU eviction).
inline constexpr std::size_t kMemoCapacity = 500'000;
void clear_memo();
std::size_t memo_size();

// ---- distinctive power ----

struct SimilarityKey {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t components = 0;
  friend auto operator<=>(const SimilarityKey&, const SimilarityKey&) = default;
};
SimilarityKey similarity_key(const Graph& g);

struct WitnessPair {
  Graph g;
  Graph h;
};

/// Pairwise scan of a class at one order. "P <= Q" is the claim that Q is at
/// least as distinctive as P: Q(G) = Q(H) implies P(G) = P(H).
struct ComparisonReport {
  PolynomialId p = PolynomialId::char_adj;
  PolynomialId q = PolynomialId::char_adj;
  std::string class_name;
  std::size_t order = 0;
  bool similar_only = false;
  std::size_t graphs = 0;
  std::size_t pairs = 0;
  /// Q equal, P different: counterexamples to P <= Q.
  std::size_t q_equal_p_differs = 0;
  /// P equal, Q different: counterexamples to Q <= P.
  std::size_t p_equal_q_differs = 0;
  std::vector<WitnessPair> q_equal_p_differs_witnesses;
  std::vector<WitnessPair> p_equal_q_differs_witnesses;
  /// Graphs without a mate in the scanned class (within the same similarity
  /// class when similar_only).
  std::size_t unique_p = 0;
  std::size_t unique_q = 0;
  /// U_P subset of U_Q.
  bool unique_p_subset_q = false;

  bool p_le_q() const { return q_equal_p_differs == 0; }
  bool q_le_p() const { return p_equal_q_differs == 0; }
};

inline constexpr std::size_t kMaxWitnesses = 5;

ComparisonReport compare_dp(PolynomialId p, PolynomialId q, const ClassSpec& spec, std::size_t n,
                            bool similar_only, std::size_t jobs = 1);
/// Same scan over a supplied list of pairwise non-isomorphic graphs.
ComparisonReport compare_dp(PolynomialId p, PolynomialId q, const std::vector<Graph>& graphs,
                            std::string class_name, std::size_t n, bool similar_only,
                            std::size_t jobs = 1);
/// Same scan from precomputed serialized values, pv[i] = P(graphs[i]) and qv[i] = Q(graphs[i]).
ComparisonReport compare_dp_values(PolynomialId p, PolynomialId q, const std::vector<Graph>& graphs,
                                   const std::vector<std::string>& pv, const std::vector<std::string>& qv,
                                   std::string class_name, std::size_t n, bool similar_only);

}  // namespace graphpoly
