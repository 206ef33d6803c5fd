#include "graphpoly/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <queue>
#include <random>
#include <sstream>

#include "graphpoly/canonical.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/graph6.hpp"
#include "graphpoly/parallel.hpp"

namespace graphpoly {

namespace {

Integer factorial(std::size_t n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational ratio(const Integer& a, const Integer& b) {
  if (b == 0) return 0;
  Rational q(a, b);
  q.canonicalize();
  return q;
}

std::string decimal(const Rational& q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", q.get_d());
  return buf;
}

std::string decimal(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", d);
  return buf;
}

nlohmann::json pair_json(const WitnessPair& w) { return {write_graph_line(w.g), write_graph_line(w.h)}; }

bool is_cheap(PolynomialId id) { return id == PolynomialId::char_adj || id == PolynomialId::char_lap; }

}  // namespace

// ---- uniqueness ratios ----

bool invariant_under_isolated_vertex(PolynomialId id) {
  switch (id) {
    case PolynomialId::tutte:
    case PolynomialId::match_g:
    case PolynomialId::euler:
    case PolynomialId::flow:
    case PolynomialId::reliability:
      return true;
    default:
      return false;
  }
}

UniquenessReport uniqueness_ratio(PolynomialId id, const ClassSpec& spec, std::size_t n, std::size_t jobs,
                                  bool keep_buckets) {
  return uniqueness_ratio(id, enumerate_class(spec, n, jobs), spec.name, n, jobs, keep_buckets);
}

UniquenessReport uniqueness_ratio(PolynomialId id, const std::vector<Graph>& graphs, std::string class_name,
                                  std::size_t n, std::size_t jobs, bool keep_buckets) {
  UniquenessReport r;
  r.polynomial = id;
  r.class_name = std::move(class_name);
  r.order = n;
  r.class_size_unlabeled = graphs.size();
  r.order_restricted_caveat = invariant_under_isolated_vertex(id);

  std::vector<std::string> values(graphs.size());
  std::vector<Integer> weights(graphs.size());
  const auto nfact = factorial(n);
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    if (graphs[i].order() != n) throw DomainError("graph of order " + std::to_string(graphs[i].order()) +
                                                  " in an order-" + std::to_string(n) + " scan");
    values[i] = compute(id, graphs[i]).to_string();
    weights[i] = nfact / canonical_form(graphs[i]).automorphism_count;
  });

  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < graphs.size(); ++i) buckets[values[i]].push_back(i);
  for (std::size_t i = 0; i < graphs.size(); ++i) r.class_size_labeled += weights[i];
  for (const auto& [value, members] : buckets) {
    if (members.size() == 1) {
      ++r.unique_unlabeled;
      r.unique_labeled += weights[members[0]];
    } else if (keep_buckets) {
      std::vector<Graph> b;
      for (auto i : members) b.push_back(graphs[i]);
      r.mate_buckets.push_back(std::move(b));
    }
  }
  r.alpha_labeled = ratio(r.unique_labeled, r.class_size_labeled);
  r.alpha_unlabeled = ratio(Integer(static_cast<unsigned long>(r.unique_unlabeled)),
                            Integer(static_cast<unsigned long>(r.class_size_unlabeled)));
  return r;
}

std::string uniqueness_csv_header() {
  return "polynomial_id,class,n,class_size_unlabeled,class_size_labeled,unique_unlabeled,unique_labeled,"
         "alpha_labeled,alpha_labeled_exact,alpha_unlabeled,order_restricted_caveat";
}

std::string to_csv_row(const UniquenessReport& r) {
  std::ostringstream os;
  os << polynomial_name(r.polynomial) << ',' << r.class_name << ',' << r.order << ',' << r.class_size_unlabeled << ','
     << r.class_size_labeled.get_str() << ',' << r.unique_unlabeled << ',' << r.unique_labeled.get_str() << ','
     << decimal(r.alpha_labeled) << ',' << to_string(r.alpha_labeled) << ',' << decimal(r.alpha_unlabeled) << ','
     << (r.order_restricted_caveat ? "true" : "false");
  return os.str();
}

nlohmann::json to_json(const UniquenessReport& r) {
  nlohmann::json j;
  j["polynomial_id"] = polynomial_name(r.polynomial);
  j["class"] = r.class_name;
  j["n"] = r.order;
  j["class_size_unlabeled"] = r.class_size_unlabeled;
  j["class_size_labeled"] = r.class_size_labeled.get_str();
  j["unique_unlabeled"] = r.unique_unlabeled;
  j["unique_labeled"] = r.unique_labeled.get_str();
  j["alpha_labeled"] = to_string(r.alpha_labeled);
  j["alpha_unlabeled"] = to_string(r.alpha_unlabeled);
  j["order_restricted_caveat"] = r.order_restricted_caveat;
  if (r.order_restricted_caveat)
    j["note"] = "mates sought within the same order only; this polynomial also has mates of other orders";
  if (!r.mate_buckets.empty()) {
    auto& b = j["mate_buckets"] = nlohmann::json::array();
    for (const auto& bucket : r.mate_buckets) {
      nlohmann::json codes = nlohmann::json::array();
      for (const auto& g : bucket) codes.push_back(write_graph_line(g));
      b.push_back(codes);
    }
  }
  return j;
}

// ---- pendant appearance frequencies ----

Graph tree_from_pruefer(const std::vector<Vertex>& sequence, std::size_t n) {
  if (n < 2 || sequence.size() != n - 2) throw DomainError("Pruefer sequence must have length n-2 with n >= 2");
  std::vector<std::size_t> degree(n + 1, 1);
  for (auto v : sequence) {
    if (v < 1 || v > n) throw DomainError("Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.push(v);
  Graph t(n);
  for (auto v : sequence) {
    const auto leaf = leaves.top();
    leaves.pop();
    t.add_edge(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const auto a = leaves.top();
  leaves.pop();
  t.add_edge(a, leaves.top());
  return t;
}

PendantFrequencyReport pendant_frequency(const RootedPendant& pendant, const ClassSpec& spec, std::size_t n,
                                         std::size_t samples, std::uint64_t seed, bool exhaustive) {
  PendantFrequencyReport r;
  r.pendant = pendant;
  r.class_name = spec.name;
  r.order = n;
  r.exhaustive = exhaustive;
  r.seed = seed;
  std::vector<std::size_t> counts;

  auto count = [&](const Graph& g) -> std::size_t {
    if (pendant.graph.order() >= g.order()) return 0;
    return find_pendant_occurrences(g, pendant, PendantMatch::labeled_exact).size();
  };

  if (spec.kind == GraphClass::trees) {
    if (n == 0) {
      // no trees of order 0
    } else if (n <= 2) {
      const auto reps = exhaustive ? 1 : samples;
      const auto t = n == 1 ? Graph(1) : path_graph(2);
      for (std::size_t i = 0; i < reps; ++i) counts.push_back(count(t));
    } else if (exhaustive) {
      if (n > kExhaustiveTreeOrder)
        throw ResourceError("exhaustive labeled trees limited to order " + std::to_string(kExhaustiveTreeOrder));
      std::vector<Vertex> seq(n - 2, 1);
      while (true) {
        counts.push_back(count(tree_from_pruefer(seq, n)));
        std::size_t k = 0;
        while (k < seq.size() && seq[k] == n) seq[k++] = 1;
        if (k == seq.size()) break;
        ++seq[k];
      }
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Vertex> pick(1, static_cast<Vertex>(n));
      std::vector<Vertex> seq(n - 2);
      for (std::size_t s = 0; s < samples; ++s) {
        for (auto& v : seq) v = pick(rng);
        counts.push_back(count(tree_from_pruefer(seq, n)));
      }
    }
  } else {
    if (!exhaustive)
      throw NotSupportedError("no random sampler for class '" + spec.name +
                              "'; use class trees or an exhaustive run (order <= " +
                              std::to_string(kExhaustiveGraphOrder) + ")");
    if (n > kExhaustiveGraphOrder)
      throw ResourceError("exhaustive labeled graphs limited to order " + std::to_string(kExhaustiveGraphOrder));
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex a = 1; a <= n; ++a)
      for (Vertex b = a + 1; b <= n; ++b) slots.emplace_back(a, b);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      Graph g(n);
      for (std::size_t k = 0; k < slots.size(); ++k)
        if ((mask >> k) & 1U) g.add_edge(slots[k].first, slots[k].second);
      if (spec.contains(g)) counts.push_back(count(g));
    }
  }

  r.samples = counts.size();
  for (auto c : counts) {
    if (c >= r.histogram.size()) r.histogram.resize(c + 1, 0);
    ++r.histogram[c];
    if (c > 0) ++r.with_pendant;
  }
  if (r.histogram.empty()) r.histogram.push_back(0);
  r.fraction_with_pendant = r.samples ? static_cast<double>(r.with_pendant) / static_cast<double>(r.samples) : 0.0;
  return r;
}

std::string pendant_frequency_csv_header() {
  return "pendant,root,class,n,samples,exhaustive,seed,with_pendant,fraction_with_pendant,histogram";
}

std::string to_csv_row(const PendantFrequencyReport& r) {
  std::ostringstream os;
  os << write_graph_line(r.pendant.graph) << ',' << r.pendant.root << ',' << r.class_name << ',' << r.order << ','
     << r.samples << ',' << (r.exhaustive ? "true" : "false") << ',' << r.seed << ',' << r.with_pendant << ','
     << decimal(r.fraction_with_pendant) << ',';
  for (std::size_t i = 0; i < r.histogram.size(); ++i) os << (i ? ";" : "") << r.histogram[i];
  return os.str();
}

nlohmann::json to_json(const PendantFrequencyReport& r) {
  nlohmann::json j;
  j["pendant"] = write_graph_line(r.pendant.graph);
  j["root"] = r.pendant.root;
  j["class"] = r.class_name;
  j["n"] = r.order;
  j["samples"] = r.samples;
  j["exhaustive"] = r.exhaustive;
  j["seed"] = r.seed;
  j["histogram"] = r.histogram;
  j["with_pendant"] = r.with_pendant;
  j["fraction_with_pendant"] = r.fraction_with_pendant;
  return j;
}

// ---- fingerprint search ----

std::vector<Fingerprint> order10_fingerprints() {
  return {
      {"G1", PolynomialId::char_adj, Polynomial::parse("x^2*(x^4-x^3-4*x^2+2*x+3)*(x^4+x^3-4*x^2-2*x+3)")},
      {"G1", PolynomialId::dom, Polynomial::parse("x^10+10*x^9+40*x^8+82*x^7+92*x^6+56*x^5+16*x^4")},
      {"G2", PolynomialId::char_adj, Polynomial::parse("x^2*(x-1)*(x+1)*(x^2-2)*(x^4-5*x^2+3)")},
      {"G2", PolynomialId::dom, Polynomial::parse("x^10+10*x^9+41*x^8+86*x^7+94*x^6+48*x^5+9*x^4")},
  };
}

namespace {

struct LabelGroup {
  std::string label;
  std::vector<const Fingerprint*> cheap;
  std::vector<const Fingerprint*> expensive;
};

std::vector<LabelGroup> group_fingerprints(const std::vector<Fingerprint>& fingerprints) {
  std::vector<LabelGroup> groups;
  for (const auto& f : fingerprints) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.label == f.label; });
    if (it == groups.end()) it = groups.insert(groups.end(), LabelGroup{f.label, {}, {}});
    (is_cheap(f.polynomial) ? it->cheap : it->expensive).push_back(&f);
  }
  return groups;
}

// Size implied by a monic char_adj target of degree n: minus the x^(n-2) coefficient.
std::size_t implied_size(const Fingerprint& f, std::size_t n) {
  const auto c = f.target.univariate_coefficients("x");
  if (c.size() != n + 1 || n < 2) throw DomainError("char_adj target of label '" + f.label + "' has wrong degree");
  const Rational m = -c[n - 2];
  if (m.get_den() != 1 || m < 0) throw DomainError("char_adj target of label '" + f.label + "' is not a spectrum");
  return static_cast<std::size_t>(m.get_num().get_ui());
}

std::size_t edge_cap(const std::vector<LabelGroup>& groups, std::size_t n) {
  std::size_t cap = 0;
  for (const auto& g : groups) {
    auto it = std::find_if(g.cheap.begin(), g.cheap.end(),
                           [](const Fingerprint* f) { return f->polynomial == PolynomialId::char_adj; });
    if (it == g.cheap.end()) return 0;
    cap = std::max(cap, implied_size(**it, n));
  }
  return cap;
}

struct GraphOutcome {
  bool passed_prefilter = false;
  std::size_t expensive = 0;
  std::vector<std::string> labels;
};

FingerprintReport scan(const std::vector<LabelGroup>& groups, const std::vector<Graph>& graphs, std::size_t budget,
                       std::size_t jobs, FingerprintReport r) {
  r.available = graphs.size();
  r.budget = budget;
  r.scanned = budget == 0 ? graphs.size() : std::min(budget, graphs.size());
  r.complete = r.scanned == graphs.size();

  std::vector<GraphOutcome> out(r.scanned);
  parallel_for(r.scanned, jobs, [&](std::size_t i) {
    const auto& g = graphs[i];
    std::map<PolynomialId, Polynomial> cache;
    auto value = [&](PolynomialId id) -> const Polynomial& {
      auto it = cache.find(id);
      if (it == cache.end()) {
        if (!is_cheap(id)) ++out[i].expensive;
        it = cache.emplace(id, compute(id, g)).first;
      }
      return it->second;
    };
    for (const auto& grp : groups) {
      bool ok = std::all_of(grp.cheap.begin(), grp.cheap.end(),
                            [&](const Fingerprint* f) { return value(f->polynomial) == f->target; });
      if (!ok) continue;
      out[i].passed_prefilter = true;
      ok = std::all_of(grp.expensive.begin(), grp.expensive.end(),
                       [&](const Fingerprint* f) { return value(f->polynomial) == f->target; });
      if (ok) out[i].labels.push_back(grp.label);
    }
  });

  for (std::size_t i = 0; i < r.scanned; ++i) {
    if (out[i].passed_prefilter) ++r.prefilter_passed;
    r.expensive_evaluations += out[i].expensive;
    for (const auto& label : out[i].labels) r.matches.push_back({label, graphs[i]});
  }
  std::vector<std::string> xi(r.matches.size());
  for (std::size_t i = 0; i < r.matches.size(); ++i) xi[i] = xi_poly(r.matches[i].graph).to_string();
  for (std::size_t i = 0; i < r.matches.size(); ++i)
    for (std::size_t j = i + 1; j < r.matches.size(); ++j)
      if (r.matches[i].label != r.matches[j].label && xi[i] == xi[j])
        r.xi_equal_pairs.push_back({r.matches[i].graph, r.matches[j].graph});
  return r;
}

}  // namespace

FingerprintReport fingerprint_search(const std::vector<Fingerprint>& fingerprints, const ClassSpec& spec,
                                     std::size_t n, std::size_t budget, std::size_t jobs) {
  const auto groups = group_fingerprints(fingerprints);
  FingerprintReport r;
  r.source = spec.name;
  r.order = n;
  r.edge_cap = edge_cap(groups, n);
  const auto graphs = r.edge_cap > 0 ? enumerate_class_sparse(spec, n, r.edge_cap, jobs) : enumerate_class(spec, n, jobs);
  return scan(groups, graphs, budget, jobs, std::move(r));
}

FingerprintReport fingerprint_search(const std::vector<Fingerprint>& fingerprints, const std::vector<Graph>& graphs,
                                     std::string source, std::size_t budget, std::size_t jobs) {
  FingerprintReport r;
  r.source = std::move(source);
  r.order = graphs.empty() ? 0 : graphs.front().order();
  return scan(group_fingerprints(fingerprints), graphs, budget, jobs, std::move(r));
}

nlohmann::json to_json(const FingerprintReport& r) {
  nlohmann::json j;
  j["source"] = r.source;
  j["n"] = r.order;
  j["budget"] = r.budget;
  j["edge_cap"] = r.edge_cap;
  j["available"] = r.available;
  j["scanned"] = r.scanned;
  j["prefilter_passed"] = r.prefilter_passed;
  j["expensive_evaluations"] = r.expensive_evaluations;
  j["complete"] = r.complete;
  auto& m = j["matches"] = nlohmann::json::array();
  for (const auto& x : r.matches) m.push_back({{"label", x.label}, {"graph6", write_graph_line(x.graph)}});
  auto& p = j["xi_equal_pairs"] = nlohmann::json::array();
  for (const auto& w : r.xi_equal_pairs) p.push_back(pair_json(w));
  return j;
}

// ---- distinctive power audit ----

std::vector<DpClaim> dp_claims() {
  using P = PolynomialId;
  const auto finer = DpKind::finer;
  const auto equiv = DpKind::equivalent;
  const auto incomp = DpKind::incomparable;
  const std::string witness_note = "witnesses sought among all pairs; the classical ones are not similar";
  return {
      {P::chromatic, P::tutte, finer, true, false, "chi from T(1-x, 0)"},
      {P::tutte, P::partition_Z, equiv, true, false, "T and Z are rescalings of each other"},
      {P::partition_Z, P::covered_C, finer, false, false, "Z is a substitution instance of C"},
      {P::covered_C, P::xi_eq, equiv, false, false, "C and xi are substitution instances of each other"},
      {P::euler, P::tutte, finer, true, false, "Euler polynomial from T"},
      {P::flow, P::tutte, finer, true, false, "flow polynomial from T(0, 1-x)"},
      {P::reliability, P::tutte, finer, true, false, "reliability polynomial from T(1, 1/p)"},
      {P::chromatic, P::gen_chromatic, finer, false, false, "chi(G;x) = GC(G;x,x)"},
      {P::gen_chromatic, P::xi_eq, finer, false, false, "GC(G;x,y) = xi(G;x,-1,x-y)"},
      {P::match_mu, P::match_g, equiv, true, false, "matching polynomials on similar graphs"},
      {P::match_g, P::match_M, equiv, true, false, "matching polynomials on similar graphs"},
      {P::match_mu, P::match_M, equiv, false, false, "mu and M both record the order"},
      {P::match_M, P::xi_eq, finer, true, false, "M(G;x,y) = xi(G;x,0,y)"},
      {P::vcover, P::indep, equiv, true, false, "VC is the reversal of In"},
      {P::indep, P::gen_chromatic, finer, true, false, "In from GC"},
      {P::indep, P::clique, equiv, false, true,
       "claimed via complementation, but In(G) = Cl(complement of G) only relates In to Cl of the complement"},
      {P::chromatic, P::indep, incomp, false, false, witness_note},
      {P::char_adj, P::chromatic, incomp, false, false, witness_note},
      {P::char_adj, P::indep, incomp, false, false, witness_note},
      {P::char_adj, P::dom, incomp, false, false, witness_note},
      {P::char_adj, P::xi_eq, incomp, false, false, "xi-mates need order >= 8"},
      {P::dom, P::xi_eq, incomp, false, false, "xi-mates need order >= 8"},
  };
}

bool DpAuditReport::ok() const {
  return complement_identity &&
         std::none_of(results.begin(), results.end(), [](const DpClaimResult& r) { return r.violation; });
}

DpAuditReport dp_chain_audit(const ClassSpec& spec, std::size_t n, std::size_t jobs) {
  return dp_chain_audit(enumerate_class(spec, n, jobs), spec.name, n, jobs);
}

DpAuditReport dp_chain_audit(const std::vector<Graph>& graphs, std::string class_name, std::size_t n,
                             std::size_t jobs) {
  DpAuditReport a;
  a.class_name = std::move(class_name);
  a.order = n;
  a.graphs = graphs.size();
  const auto claims = dp_claims();

  std::vector<PolynomialId> ids;
  for (const auto& c : claims)
    for (auto id : {c.p, c.q})
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  std::map<PolynomialId, std::vector<std::string>> values;
  for (auto id : ids) values[id].resize(graphs.size());
  std::vector<char> identity(graphs.size(), 0);
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    for (auto id : ids) values[id][i] = compute(id, graphs[i]).to_string();
    identity[i] = independence_poly(graphs[i]) == clique_poly(complement(graphs[i]));
  });
  a.complement_identity = std::all_of(identity.begin(), identity.end(), [](char c) { return c != 0; });

  for (const auto& c : claims) {
    DpClaimResult res{c, compare_dp_values(c.p, c.q, graphs, values[c.p], values[c.q], a.class_name, n, c.similar_only),
                      false, false};
    const auto& rep = res.report;
    switch (c.kind) {
      case DpKind::finer:
        res.confirmed = rep.p_le_q() && rep.unique_p_subset_q;
        break;
      case DpKind::equivalent:
        res.confirmed = rep.p_le_q() && rep.q_le_p();
        break;
      case DpKind::incomparable:
        res.confirmed = !rep.p_le_q() && !rep.q_le_p();
        break;
    }
    res.violation = c.kind != DpKind::incomparable && !res.confirmed && !c.known_false;
    a.results.push_back(std::move(res));
  }
  return a;
}

std::string_view dp_kind_name(DpKind kind) {
  switch (kind) {
    case DpKind::finer: return "finer";
    case DpKind::equivalent: return "equivalent";
    case DpKind::incomparable: return "incomparable";
  }
  return "finer";
}

std::string dp_audit_csv_header() {
  return "class,n,p,q,relation,similar_only,known_false,pairs,q_equal_p_differs,p_equal_q_differs,unique_p,unique_q,"
         "unique_p_subset_q,confirmed,violation";
}

std::string to_csv(const DpAuditReport& a) {
  std::ostringstream os;
  for (const auto& r : a.results) {
    const auto& c = r.claim;
    const auto& rep = r.report;
    os << a.class_name << ',' << a.order << ',' << polynomial_name(c.p) << ',' << polynomial_name(c.q) << ','
       << dp_kind_name(c.kind) << ',' << (c.similar_only ? "true" : "false") << ','
       << (c.known_false ? "true" : "false") << ',' << rep.pairs << ',' << rep.q_equal_p_differs << ','
       << rep.p_equal_q_differs << ',' << rep.unique_p << ',' << rep.unique_q << ','
       << (rep.unique_p_subset_q ? "true" : "false") << ',' << (r.confirmed ? "true" : "false") << ','
       << (r.violation ? "true" : "false") << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const ComparisonReport& r) {
  nlohmann::json j;
  j["p"] = polynomial_name(r.p);
  j["q"] = polynomial_name(r.q);
  j["class"] = r.class_name;
  j["n"] = r.order;
  j["similar_only"] = r.similar_only;
  j["graphs"] = r.graphs;
  j["pairs"] = r.pairs;
  j["q_equal_p_differs"] = r.q_equal_p_differs;
  j["p_equal_q_differs"] = r.p_equal_q_differs;
  auto& a = j["q_equal_p_differs_witnesses"] = nlohmann::json::array();
  for (const auto& w : r.q_equal_p_differs_witnesses) a.push_back(pair_json(w));
  auto& b = j["p_equal_q_differs_witnesses"] = nlohmann::json::array();
  for (const auto& w : r.p_equal_q_differs_witnesses) b.push_back(pair_json(w));
  j["unique_p"] = r.unique_p;
  j["unique_q"] = r.unique_q;
  j["unique_p_subset_q"] = r.unique_p_subset_q;
  j["p_le_q"] = r.p_le_q();
  j["q_le_p"] = r.q_le_p();
  return j;
}

nlohmann::json to_json(const DpAuditReport& a) {
  nlohmann::json j;
  j["class"] = a.class_name;
  j["n"] = a.order;
  j["graphs"] = a.graphs;
  j["complement_identity"] = a.complement_identity;
  j["ok"] = a.ok();
  auto& claims = j["claims"] = nlohmann::json::array();
  for (const auto& r : a.results) {
    nlohmann::json c = to_json(r.report);
    c["relation"] = dp_kind_name(r.claim.kind);
    c["known_false"] = r.claim.known_false;
    c["note"] = r.claim.note;
    c["confirmed"] = r.confirmed;
    c["violation"] = r.violation;
    claims.push_back(std::move(c));
  }
  return j;
}

}  // namespace graphpoly
