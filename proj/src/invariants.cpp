#include "graphpoly/invariants.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "graphpoly/errors.hpp"
#include "graphpoly/parallel.hpp"
#include "memo.hpp"

namespace graphpoly {

namespace detail {

LruMemo<Polynomial>& polynomial_memo() {
  static LruMemo<Polynomial> memo(kMemoCapacity);
  return memo;
}

LruMemo<std::vector<Integer>>& counts_memo() {
  static LruMemo<std::vector<Integer>> memo(kMemoCapacity);
  return memo;
}

}  // namespace detail

namespace {

struct IdInfo {
  PolynomialId id;
  std::string_view name;
  std::vector<std::string> vars;
};

const std::vector<IdInfo>& id_table() {
  static const std::vector<IdInfo> table{
      {PolynomialId::char_adj, "char_adj", {"x"}},
      {PolynomialId::char_lap, "char_lap", {"x"}},
      {PolynomialId::dom, "dom", {"x"}},
      {PolynomialId::match_mu, "match_mu", {"x"}},
      {PolynomialId::match_g, "match_g", {"x"}},
      {PolynomialId::match_M, "match_M", {"w1", "w2"}},
      {PolynomialId::indep, "indep", {"x"}},
      {PolynomialId::vcover, "vcover", {"x"}},
      {PolynomialId::clique, "clique", {"x"}},
      {PolynomialId::covered_C, "covered_C", {"x", "y", "z"}},
      {PolynomialId::xi_eq, "xi_eq", {"x", "y", "z"}},
      {PolynomialId::tutte, "tutte", {"x", "y"}},
      {PolynomialId::partition_Z, "partition_Z", {"q", "w"}},
      {PolynomialId::chromatic, "chromatic", {"x"}},
      {PolynomialId::gen_chromatic, "gen_chromatic", {"x", "y"}},
      {PolynomialId::euler, "euler", {"x"}},
      {PolynomialId::flow, "flow", {"x"}},
      {PolynomialId::reliability, "reliability", {"p"}},
  };
  return table;
}

const IdInfo& info(PolynomialId id) { return id_table().at(static_cast<std::size_t>(id)); }

}  // namespace

std::span<const PolynomialId> all_polynomial_ids() {
  static const auto ids = [] {
    std::vector<PolynomialId> v;
    for (const auto& i : id_table()) v.push_back(i.id);
    return v;
  }();
  return ids;
}

std::string_view polynomial_name(PolynomialId id) { return info(id).name; }

PolynomialId polynomial_id(std::string_view name) {
  for (const auto& i : id_table())
    if (i.name == name) return i.id;
  std::string known;
  for (const auto& i : id_table()) known += (known.empty() ? "" : ", ") + std::string(i.name);
  throw DomainError("unknown polynomial '" + std::string(name) + "' (expected one of " + known + ")");
}

std::vector<std::string> polynomial_variables(PolynomialId id) { return info(id).vars; }

Polynomial compute(PolynomialId id, const Graph& g) {
  switch (id) {
    case PolynomialId::char_adj: return char_poly_adjacency(g);
    case PolynomialId::char_lap: return char_poly_laplacian(g);
    case PolynomialId::dom: return domination_poly(g);
    case PolynomialId::match_mu: return matching_mu(g);
    case PolynomialId::match_g: return matching_g(g);
    case PolynomialId::match_M: return matching_M(g);
    case PolynomialId::indep: return independence_poly(g);
    case PolynomialId::vcover: return vertex_cover_poly(g);
    case PolynomialId::clique: return clique_poly(g);
    case PolynomialId::covered_C: return covered_components_poly(g);
    case PolynomialId::xi_eq: return xi_poly(g);
    case PolynomialId::tutte: return tutte_poly(g);
    case PolynomialId::partition_Z: return partition_Z(g);
    case PolynomialId::chromatic: return chromatic_poly(g);
    case PolynomialId::gen_chromatic: return gen_chromatic_poly(g);
    case PolynomialId::euler: return euler_poly(g);
    case PolynomialId::flow: return flow_poly(g);
    case PolynomialId::reliability: return reliability_poly(g);
  }
  throw DomainError("unknown polynomial id");
}

void clear_memo() {
  detail::polynomial_memo().clear();
  detail::counts_memo().clear();
}

std::size_t memo_size() { return detail::polynomial_memo().size() + detail::counts_memo().size(); }

SimilarityKey similarity_key(const Graph& g) { return {g.order(), g.size(), connected_components(g)}; }

ComparisonReport compare_dp(PolynomialId p, PolynomialId q, const ClassSpec& spec, std::size_t n,
                            bool similar_only, std::size_t jobs) {
  return compare_dp(p, q, enumerate_class(spec, n, jobs), spec.name, n, similar_only, jobs);
}

ComparisonReport compare_dp(PolynomialId p, PolynomialId q, const std::vector<Graph>& graphs,
                            std::string class_name, std::size_t n, bool similar_only, std::size_t jobs) {
  std::vector<std::string> pv(graphs.size()), qv(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    pv[i] = compute(p, graphs[i]).to_string();
    qv[i] = compute(q, graphs[i]).to_string();
  });
  return compare_dp_values(p, q, graphs, pv, qv, std::move(class_name), n, similar_only);
}

ComparisonReport compare_dp_values(PolynomialId p, PolynomialId q, const std::vector<Graph>& graphs,
                                   const std::vector<std::string>& pv, const std::vector<std::string>& qv,
                                   std::string class_name, std::size_t n, bool similar_only) {
  if (pv.size() != graphs.size() || qv.size() != graphs.size())
    throw DomainError("value lists must match the graph list");
  ComparisonReport r;
  r.p = p;
  r.q = q;
  r.class_name = std::move(class_name);
  r.order = n;
  r.similar_only = similar_only;
  r.graphs = graphs.size();
  std::vector<SimilarityKey> keys(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) keys[i] = similar_only ? similarity_key(graphs[i]) : SimilarityKey{};

  // group index lists: scope (similarity class) -> values
  std::map<SimilarityKey, std::vector<std::size_t>> scopes;
  for (std::size_t i = 0; i < graphs.size(); ++i) scopes[keys[i]].push_back(i);

  std::vector<bool> unique_p(graphs.size()), unique_q(graphs.size());
  auto scan = [&](const std::vector<std::string>& eq, const std::vector<std::string>& other,
                  std::size_t& violations, std::vector<WitnessPair>& witnesses, std::vector<bool>& unique_eq) {
    for (const auto& [key, members] : scopes) {
      std::map<std::string, std::vector<std::size_t>> buckets;
      for (auto i : members) buckets[eq[i]].push_back(i);
      for (const auto& [value, bucket] : buckets) {
        if (bucket.size() == 1) unique_eq[bucket[0]] = true;
        std::map<std::string, std::vector<std::size_t>> sub;
        for (auto i : bucket) sub[other[i]].push_back(i);
        std::size_t same = 0;
        for (const auto& [v, s] : sub) same += s.size() * (s.size() - 1) / 2;
        violations += bucket.size() * (bucket.size() - 1) / 2 - same;
        if (sub.size() > 1) {
          auto it = sub.begin();
          const auto first = it->second.front();
          for (++it; it != sub.end() && witnesses.size() < kMaxWitnesses; ++it)
            witnesses.push_back({graphs[first], graphs[it->second.front()]});
        }
      }
    }
  };
  scan(qv, pv, r.q_equal_p_differs, r.q_equal_p_differs_witnesses, unique_q);
  scan(pv, qv, r.p_equal_q_differs, r.p_equal_q_differs_witnesses, unique_p);

  for (const auto& [key, members] : scopes) r.pairs += members.size() * (members.size() - 1) / 2;
  r.unique_p = static_cast<std::size_t>(std::count(unique_p.begin(), unique_p.end(), true));
  r.unique_q = static_cast<std::size_t>(std::count(unique_q.begin(), unique_q.end(), true));
  r.unique_p_subset_q = true;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (unique_p[i] && !unique_q[i]) r.unique_p_subset_q = false;
  return r;
}

}  // namespace graphpoly
