#include "graphpoly/mates.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "graphpoly/canonical.hpp"
#include "graphpoly/classes.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/graph6.hpp"
#include "graphpoly/parallel.hpp"

namespace graphpoly {

namespace {

Vertex local_index(const std::vector<Vertex>& witness, Vertex v) {
  return static_cast<Vertex>(std::lower_bound(witness.begin(), witness.end(), v) - witness.begin() + 1);
}

bool occurrence_matches(const Graph& g, const PendantOccurrence& occ, const Graph& p, Vertex root) {
  if (!is_valid_occurrence(g, occ) || occ.witness.size() != p.order()) return false;
  const auto induced = induced_subgraph(g, occ.witness);
  return are_isomorphic_rooted(induced, local_index(occ.witness, occ.root), p, root);
}

std::string deletion_key(const Graph& tree, Vertex v, DeletionRelation relation) {
  const auto d = delete_vertex(tree, v);
  return relation == DeletionRelation::isomorphic ? canonical_key(d) : char_poly_adjacency(d).to_string();
}

// Walks the induced path on the witness set; returns vertices in path order
// or an empty vector if G[W] is not a path.
std::vector<Vertex> path_order(const Graph& g, const std::vector<Vertex>& w) {
  const auto p = induced_subgraph(g, w);
  if (!is_tree(p)) return {};
  std::vector<Vertex> ends;
  for (Vertex v = 1; v <= p.order(); ++v) {
    if (p.degree(v) > 2) return {};
    if (p.degree(v) <= 1) ends.push_back(v);
  }
  std::vector<Vertex> order{ends.front()};
  Vertex prev = 0;
  while (order.size() < p.order()) {
    for (auto n : p.neighbors(order.back()))
      if (n != prev) {
        prev = order.back();
        order.push_back(n);
        break;
      }
  }
  for (auto& v : order) v = w[v - 1];
  return order;
}

Polynomial laplacian_minor_poly(const Graph& g, Vertex v) {
  const auto adj = g.adjacency();
  std::vector<std::vector<Integer>> m;
  for (Vertex i = 1; i <= g.order(); ++i) {
    if (i == v) continue;
    std::vector<Integer> row;
    for (Vertex j = 1; j <= g.order(); ++j) {
      if (j == v) continue;
      row.push_back(i == j ? Integer(static_cast<unsigned long>(g.degree(i))) : -Integer(adj[i - 1][j - 1]));
    }
    m.push_back(std::move(row));
  }
  std::vector<Integer> c = berkowitz(m);
  std::reverse(c.begin(), c.end());
  return Polynomial::univariate("x", c);
}

Graph random_host(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> order(1, 6);
  std::bernoulli_distribution edge(0.5);
  Graph h(order(rng));
  for (Vertex i = 1; i <= h.order(); ++i)
    for (Vertex j = i + 1; j <= h.order(); ++j)
      if (edge(rng)) h.add_edge(i, j);
  return h;
}

}  // namespace

std::vector<PseudosimilarPair> find_pseudosimilar_trees(std::size_t max_order, DeletionRelation relation,
                                                        std::size_t jobs) {
  if (max_order > kPseudosimilarMaxOrder)
    throw ResourceError("pseudosimilar search limited to order " + std::to_string(kPseudosimilarMaxOrder));
  std::vector<PseudosimilarPair> out;
  const auto spec = class_spec("trees");
  for (std::size_t n = 3; n <= max_order; ++n) {
    const auto trees = enumerate_class(spec, n, jobs);
    std::vector<std::vector<PseudosimilarPair>> found(trees.size());
    parallel_for(trees.size(), jobs, [&](std::size_t i) {
      const auto& t = trees[i];
      const auto lab = canonical_labeling(t);
      std::vector<std::string> keys(n + 1);
      for (Vertex v = 1; v <= n; ++v) keys[v] = deletion_key(t, v, relation);
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
          if (lab.orbits[u - 1] != lab.orbits[v - 1] && keys[u] == keys[v])
            found[i].push_back({t, u, v, relation});
    });
    for (auto& f : found)
      for (auto& p : f) out.push_back(std::move(p));
  }
  return out;
}

bool is_pseudosimilar(const PseudosimilarPair& pair) {
  const auto& t = pair.tree;
  if (!is_tree(t) || !t.has_vertex(pair.u) || !t.has_vertex(pair.v) || pair.u == pair.v) return false;
  if (are_isomorphic_rooted(t, pair.u, t, pair.v)) return false;
  const auto a = delete_vertex(t, pair.u);
  const auto b = delete_vertex(t, pair.v);
  return pair.relation == DeletionRelation::isomorphic ? are_isomorphic(a, b)
                                                       : char_poly_adjacency(a) == char_poly_adjacency(b);
}

std::string_view construction_name(Construction c) {
  switch (c) {
    case Construction::schwenk_swap: return "schwenk_swap";
    case Construction::stem_toggle: return "stem_toggle";
    case Construction::p5_graft: return "p5_graft";
    case Construction::xi_swap: return "xi_swap";
    case Construction::clique_root_swap: return "clique_root_swap";
    case Construction::search: return "search";
  }
  return "search";
}

Construction construction_from_name(std::string_view name) {
  for (auto c : {Construction::schwenk_swap, Construction::stem_toggle, Construction::p5_graft, Construction::xi_swap,
                 Construction::clique_root_swap, Construction::search})
    if (construction_name(c) == name) return c;
  throw DomainError("unknown construction '" + std::string(name) +
                    "' (expected schwenk_swap, stem_toggle, p5_graft, xi_swap, clique_root_swap or search)");
}

nlohmann::json to_json(const MateCertificate& c) {
  nlohmann::json j;
  j["construction"] = construction_name(c.construction);
  j["g"] = write_graph_line(c.g);
  j["h"] = write_graph_line(c.h);
  j["polynomial_id"] = polynomial_name(c.polynomial);
  j["equal"] = c.equal;
  j["nonisomorphic"] = c.nonisomorphic;
  j["polynomial"] = c.value.to_string();
  if (!c.implied.empty()) {
    nlohmann::json implied = nlohmann::json::object();
    for (const auto& [id, eq] : c.implied) implied[std::string(polynomial_name(id))] = eq;
    j["implied"] = implied;
  }
  return j;
}

MateCertificate verify_mate(const Graph& g, const Graph& h, PolynomialId id, Construction construction) {
  MateCertificate c;
  c.g = g;
  c.h = h;
  c.polynomial = id;
  c.construction = construction;
  c.value = compute(id, g);
  c.equal = c.value == compute(id, h);
  c.nonisomorphic = !are_isomorphic(g, h);
  return c;
}

MateCertificate schwenk_swap(const Graph& g, const PendantOccurrence& occ, const PseudosimilarPair& pair) {
  if (!occurrence_matches(g, occ, pair.tree, pair.v))
    throw DomainError("occurrence is not a pendant copy of the gadget tree rooted at v");
  const auto h = replace_pendant(g, occ, RootedPendant{pair.tree, pair.u});
  return verify_mate(g, h, PolynomialId::char_adj, Construction::schwenk_swap);
}

MateCertificate xi_swap(const Graph& g, const PendantOccurrence& occ, const PseudosimilarPair& pair) {
  if (!occurrence_matches(g, occ, pair.tree, pair.v))
    throw DomainError("occurrence is not a pendant copy of the gadget tree rooted at v");
  const auto h = replace_pendant(g, occ, RootedPendant{pair.tree, pair.u});
  auto c = verify_mate(g, h, PolynomialId::covered_C, Construction::xi_swap);
  for (auto id : {PolynomialId::xi_eq, PolynomialId::tutte, PolynomialId::match_M})
    c.implied.emplace_back(id, compute(id, g) == compute(id, h));
  return c;
}

std::optional<MateCertificate> stem_toggle(const Graph& g) {
  if (!g.is_simple()) throw DomainError("stem toggle requires a simple graph");
  auto has_leaf_besides = [&](Vertex v, Vertex partner) {
    for (auto n : g.neighbors(v))
      if (n != partner && g.degree(n) == 1) return true;
    return false;
  };
  for (const auto& e : g.edges())
    if (has_leaf_besides(e.u, e.v) && has_leaf_besides(e.v, e.u))
      return verify_mate(g, delete_edge(g, e), PolynomialId::dom, Construction::stem_toggle);
  return std::nullopt;
}

RootedPendant p5_pendant(Vertex root_position) { return make_pendant(path_graph(5), root_position); }

RootedPendant p5_hat_pendant(Vertex root_position) {
  auto g = path_graph(5);
  g.add_edge(2, 4);
  return make_pendant(g, root_position);
}

MateCertificate p5_graft_swap(const Graph& g, const PendantOccurrence& occ) {
  if (!is_valid_occurrence(g, occ) || occ.witness.size() != 5)
    throw DomainError("occurrence is not a pendant P5");
  const auto path = path_order(g, occ.witness);
  if (path.size() != 5) throw DomainError("occurrence is not a pendant P5");
  if (occ.root == path.front() || occ.root == path.back())
    throw DomainError("P5 root is a path end; its end vertices would not both stay leaves");
  auto h = g;
  h.add_edge(path[1], path[3]);
  return verify_mate(g, h, PolynomialId::dom, Construction::p5_graft);
}

MateCertificate clique_root_swap(const Graph& g, const PendantOccurrence& occ) {
  if (!occurrence_matches(g, occ, path_graph(3), 1))
    throw DomainError("occurrence is not a pendant P3 rooted at an end vertex");
  const auto h = replace_pendant(g, occ, make_pendant(path_graph(3), 2));
  return verify_mate(g, h, PolynomialId::clique, Construction::clique_root_swap);
}

std::vector<LaplacianCandidate> laplacian_swap_search(std::size_t max_order, std::size_t hosts,
                                                      std::uint64_t seed, std::size_t jobs) {
  if (max_order > kLaplacianSearchMaxOrder)
    throw ResourceError("Laplacian swap search limited to order " + std::to_string(kLaplacianSearchMaxOrder));
  std::vector<Graph> gadgets;
  for (std::size_t n = 2; n <= max_order; ++n)
    for (auto& t : enumerate_class(class_spec("trees"), n, jobs)) gadgets.push_back(std::move(t));
  for (std::size_t n = 3; n <= std::min<std::size_t>(max_order, 7); ++n)
    for (auto& g : enumerate_class(class_spec("all"), n, jobs))
      if (is_connected(g) && !is_tree(g)) gadgets.push_back(std::move(g));

  std::vector<Graph> battery{Graph(1), complete_graph(2), path_graph(3)};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < hosts; ++i) battery.push_back(random_host(rng));

  std::vector<std::vector<LaplacianCandidate>> found(gadgets.size());
  parallel_for(gadgets.size(), jobs, [&](std::size_t i) {
    const auto& s = gadgets[i];
    const auto lab = canonical_labeling(s);
    std::vector<std::string> minor(s.order() + 1);
    for (Vertex v = 1; v <= s.order(); ++v) minor[v] = laplacian_minor_poly(s, v).to_string();
    for (Vertex u = 1; u <= s.order(); ++u)
      for (Vertex v = u + 1; v <= s.order(); ++v) {
        if (lab.orbits[u - 1] == lab.orbits[v - 1] || minor[u] != minor[v]) continue;
        std::size_t ok = 0;
        for (const auto& host : battery) {
          const Vertex attach = static_cast<Vertex>(1 + (u + v) % host.order());
          const auto a = graft_pendant(host, attach, RootedPendant{s, v});
          const auto b = graft_pendant(host, attach, RootedPendant{s, u});
          if (char_poly_laplacian(a) != char_poly_laplacian(b)) break;
          ++ok;
        }
        if (ok == battery.size()) found[i].push_back({s, u, v, ok});
      }
  });

  std::set<CanonicalForm> seen;
  std::vector<LaplacianCandidate> out;
  for (auto& list : found)
    for (auto& c : list) {
      std::vector<std::uint32_t> colors(c.tree.order(), 0);
      colors[c.u - 1] = colors[c.v - 1] = 1;
      if (seen.insert(canonical_labeling(c.tree, colors).form).second) out.push_back(std::move(c));
    }
  return out;
}

}  // namespace graphpoly
