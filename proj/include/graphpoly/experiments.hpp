#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphpoly/classes.hpp"
#include "graphpoly/invariants.hpp"
#include "graphpoly/pendant.hpp"
#include "json.hpp"

namespace graphpoly {

// ---- uniqueness ratios ----

/// P-uniqueness at one order, mates sought among graphs of the same order.
struct UniquenessReport {
  PolynomialId polynomial = PolynomialId::char_adj;
  std::string class_name;
  std::size_t order = 0;
  std::size_t class_size_unlabeled = 0;
  /// Sum of n!/|Aut| over the class.
  Integer class_size_labeled = 0;
  std::size_t unique_unlabeled = 0;
  Integer unique_labeled = 0;
  Rational alpha_labeled = 0;
  Rational alpha_unlabeled = 0;
  /// Set when P takes equal values on graphs of different orders (adding an
  /// isolated vertex leaves it unchanged), so the counts only bound the
  /// unrestricted uniqueness from above.
  bool order_restricted_caveat = false;
  /// Non-singleton buckets (graphs sharing a value), when requested.
  std::vector<std::vector<Graph>> mate_buckets;
};

/// True for tutte, match_g, euler, flow and reliability.
bool invariant_under_isolated_vertex(PolynomialId id);

UniquenessReport uniqueness_ratio(PolynomialId id, const ClassSpec& spec, std::size_t n, std::size_t jobs = 1,
                                  bool keep_buckets = false);
/// Same over a supplied list of pairwise non-isomorphic graphs of order n.
UniquenessReport uniqueness_ratio(PolynomialId id, const std::vector<Graph>& graphs, std::string class_name,
                                  std::size_t n, std::size_t jobs = 1, bool keep_buckets = false);

std::string uniqueness_csv_header();
std::string to_csv_row(const UniquenessReport& r);
nlohmann::json to_json(const UniquenessReport& r);

// ---- pendant appearance frequencies ----

struct PendantFrequencyReport {
  RootedPendant pendant;
  std::string class_name;
  std::size_t order = 0;
  std::size_t samples = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  /// histogram[f] = number of sampled graphs with exactly f labeled-exact pendant copies.
  std::vector<std::size_t> histogram;
  std::size_t with_pendant = 0;
  double fraction_with_pendant = 0.0;
};

/// Largest order for exhaustive runs: trees through all n^(n-2) Pruefer
/// sequences, other classes through all labeled graphs.
inline constexpr std::size_t kExhaustiveTreeOrder = 8;
inline constexpr std::size_t kExhaustiveGraphOrder = 6;

/// Labeled tree from a Pruefer sequence over 1..n (length n-2).
Graph tree_from_pruefer(const std::vector<Vertex>& sequence, std::size_t n);

/// Counts labeled-exact pendant copies in uniform random labeled trees
/// (Pruefer sampling), or over every labeled member of the class when
/// exhaustive. Random sampling is only available for trees: other classes
/// throw NotSupportedError unless exhaustive. Budget overruns throw ResourceError.
PendantFrequencyReport pendant_frequency(const RootedPendant& pendant, const ClassSpec& spec, std::size_t n,
                                         std::size_t samples, std::uint64_t seed, bool exhaustive = false);

std::string pendant_frequency_csv_header();
std::string to_csv_row(const PendantFrequencyReport& r);
nlohmann::json to_json(const PendantFrequencyReport& r);

// ---- fingerprint search ----

/// A target value of one polynomial. Fingerprints sharing a label must all
/// match for a graph to count as a hit for that label.
struct Fingerprint {
  std::string label;
  PolynomialId polynomial = PolynomialId::char_adj;
  Polynomial target;
};

struct FingerprintMatch {
  std::string label;
  Graph graph;
};

struct FingerprintReport {
  std::string source;
  std::size_t order = 0;
  std::size_t budget = 0;
  /// Size cap applied to the enumeration, derived from char_adj targets (0: none).
  std::size_t edge_cap = 0;
  std::size_t available = 0;
  std::size_t scanned = 0;
  /// Graphs that passed every characteristic-polynomial prefilter of some label.
  std::size_t prefilter_passed = 0;
  /// Evaluations of the expensive polynomials (everything but char_adj, char_lap).
  std::size_t expensive_evaluations = 0;
  /// False when the budget stopped the scan early.
  bool complete = false;
  std::vector<FingerprintMatch> matches;
  /// Hits of different labels with equal C (equivalently equal xi).
  std::vector<WitnessPair> xi_equal_pairs;
};

/// Dom and P_A fingerprints of two order-10 graphs told apart by Dom and P_A, labels "G1" and "G2".
std::vector<Fingerprint> order10_fingerprints();

/// Scans the order-n members of a class (the first `budget` of them, in
/// canonical order). When every label carries a char_adj target the scan is
/// restricted to graphs with at most that many edges, which lifts the order
/// budget to kSparseMaxOrder.
FingerprintReport fingerprint_search(const std::vector<Fingerprint>& fingerprints, const ClassSpec& spec,
                                     std::size_t n, std::size_t budget, std::size_t jobs = 1);
/// Same over supplied graphs (e.g. graph6 output of an external generator).
FingerprintReport fingerprint_search(const std::vector<Fingerprint>& fingerprints, const std::vector<Graph>& graphs,
                                     std::string source, std::size_t budget, std::size_t jobs = 1);

nlohmann::json to_json(const FingerprintReport& r);

// ---- distinctive power audit ----

enum class DpKind {
  /// P <= Q: Q(G) = Q(H) implies P(G) = P(H).
  finer,
  /// both directions
  equivalent,
  /// neither direction
  incomparable,
};

struct DpClaim {
  PolynomialId p = PolynomialId::char_adj;
  PolynomialId q = PolynomialId::char_adj;
  DpKind kind = DpKind::finer;
  /// Compare similar pairs only.
  bool similar_only = true;
  /// The claim is known to be false; a counterexample is expected.
  bool known_false = false;
  std::string note;
};

/// The claimed relations and incomparabilities between the polynomials.
std::vector<DpClaim> dp_claims();

struct DpClaimResult {
  DpClaim claim;
  ComparisonReport report;
  /// For finer/equivalent: no counterexample at this order. For
  /// incomparable: witnesses for both directions were found.
  bool confirmed = false;
  /// finer/equivalent claim refuted although not marked known_false.
  bool violation = false;
};

struct DpAuditReport {
  std::string class_name;
  std::size_t order = 0;
  std::size_t graphs = 0;
  std::vector<DpClaimResult> results;
  /// In(G) = Cl(complement of G) on every scanned graph.
  bool complement_identity = false;

  bool ok() const;
};

DpAuditReport dp_chain_audit(const ClassSpec& spec, std::size_t n, std::size_t jobs = 1);
DpAuditReport dp_chain_audit(const std::vector<Graph>& graphs, std::string class_name, std::size_t n,
                             std::size_t jobs = 1);

std::string_view dp_kind_name(DpKind kind);
std::string dp_audit_csv_header();
/// One row per claim.
std::string to_csv(const DpAuditReport& r);
nlohmann::json to_json(const DpAuditReport& r);
nlohmann::json to_json(const ComparisonReport& r);

}  // namespace graphpoly
