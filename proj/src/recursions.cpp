#include <algorithm>
#include <unordered_map>

#include "graphpoly/canonical.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/invariants.hpp"
#include "memo.hpp"

namespace graphpoly {

namespace {

const Polynomial& X() {
  static const Polynomial v = Polynomial::variable("x");
  return v;
}
const Polynomial& Y() {
  static const Polynomial v = Polynomial::variable("y");
  return v;
}
const Polynomial& Z() {
  static const Polynomial v = Polynomial::variable("z");
  return v;
}

Graph without_loops(const Graph& g) {
  std::vector<Edge> keep;
  for (const auto& e : g.edges())
    if (!e.is_loop()) keep.push_back(e);
  return Graph(g.order(), std::move(keep));
}

std::size_t loop_count(const Graph& g) {
  return static_cast<std::size_t>(std::count_if(g.edges().begin(), g.edges().end(),
                                                [](const Edge& e) { return e.is_loop(); }));
}

// A non-loop edge at a vertex of least positive non-loop degree; such edges
// tend to be bridges or to shrink the graph fastest.
Edge pick_edge(const Graph& g) {
  std::vector<std::size_t> deg(g.order() + 1, 0);
  for (const auto& e : g.edges())
    if (!e.is_loop()) {
      ++deg[e.u];
      ++deg[e.v];
    }
  Vertex best = 0;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (deg[v] > 0 && (best == 0 || deg[v] < deg[best])) best = v;
  for (const auto& e : g.edges())
    if (!e.is_loop() && (e.u == best || e.v == best)) return e;
  throw DomainError("no non-loop edge");
}

std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& c : component_vertex_sets(g)) out.push_back(induced_subgraph(g, c));
  return out;
}

template <typename Fn>
Polynomial memoised(char tag, const Graph& g, Fn&& compute) {
  const auto key = tag + canonical_key(g);
  auto& memo = detail::polynomial_memo();
  if (auto hit = memo.get(key)) return *hit;
  auto value = compute();
  memo.put(key, value);
  return value;
}

// ---- xi ----

Polynomial xi_connected(const Graph& g);

Polynomial xi_rec(const Graph& g) {
  if (g.order() == 0) return Polynomial(1);
  if (!is_connected(g)) {
    Polynomial r(1);
    for (const auto& c : components(g)) r *= xi_connected(c);
    return r;
  }
  return xi_connected(g);
}

Polynomial xi_connected(const Graph& g) {
  if (g.size() == 0) return X();
  return memoised('X', g, [&] {
    const bool only_loops = std::all_of(g.edges().begin(), g.edges().end(),
                                        [](const Edge& e) { return e.is_loop(); });
    if (only_loops) {
      const auto loop = g.edges().front();
      return (1 + Y()) * xi_rec(delete_edge(g, loop)) + Z() * xi_rec(delete_vertex(g, loop.u));
    }
    const auto e = pick_edge(g);
    return xi_rec(delete_edge(g, e)) + Y() * xi_rec(contract_edge(g, e)) + Z() * xi_rec(extract_edge(g, e));
  });
}

// ---- Tutte ----

Polynomial tutte_connected(const Graph& g);

Polynomial tutte_rec(const Graph& g) {
  const auto loops = loop_count(g);
  const auto h = loops ? without_loops(g) : g;
  Polynomial r = Polynomial::monomial("y", static_cast<std::uint32_t>(loops));
  if (h.size() == 0) return r;
  for (const auto& c : components(h))
    if (c.size() > 0) r *= tutte_connected(c);
  return r;
}

Polynomial tutte_connected(const Graph& g) {
  if (g.size() + 1 == g.order()) return Polynomial::monomial("x", static_cast<std::uint32_t>(g.size()));
  return memoised('T', g, [&] {
    const auto e = pick_edge(g);
    if (is_bridge(g, e)) return X() * tutte_rec(contract_edge(g, e));
    return tutte_rec(delete_edge(g, e)) + tutte_rec(contract_edge(g, e));
  });
}

// ---- chromatic ----

Polynomial chromatic_connected(const Graph& g);

Polynomial chromatic_rec(const Graph& g) {
  Polynomial r(1);
  for (const auto& c : components(g)) r *= chromatic_connected(c);
  return r;
}

Polynomial chromatic_connected(const Graph& g) {
  const auto n = g.order();
  if (n == 1) return X();
  if (g.size() + 1 == n) return X() * (X() - 1).pow(static_cast<std::uint32_t>(n - 1));
  if (g.size() == n * (n - 1) / 2) {
    Polynomial r(1);
    for (std::size_t i = 0; i < n; ++i) r *= X() - static_cast<int>(i);
    return r;
  }
  return memoised('K', g, [&] {
    const auto e = pick_edge(g);
    return chromatic_rec(delete_edge(g, e)) - chromatic_rec(underlying_simple(contract_edge(g, e)));
  });
}

// ---- matchings ----

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Integer> matching_connected(const Graph& g);

std::vector<Integer> matching_rec(const Graph& g) {
  std::vector<Integer> r{1};
  if (g.size() == 0) return r;
  for (const auto& c : components(g))
    if (c.size() > 0) r = convolve(r, matching_connected(c));
  return r;
}

std::vector<Integer> matching_connected(const Graph& g) {
  if (g.order() == 2) return {1, static_cast<unsigned long>(g.size())};
  const auto key = 'M' + canonical_key(g);
  auto& memo = detail::counts_memo();
  if (auto hit = memo.get(key)) return *hit;
  const auto e = pick_edge(g);
  auto without = matching_rec(delete_edge(g, e));
  const auto with = matching_rec(extract_edge(g, e));
  if (without.size() < with.size() + 1) without.resize(with.size() + 1);
  for (std::size_t k = 0; k < with.size(); ++k) without[k + 1] += with[k];
  while (without.size() > 1 && without.back() == 0) without.pop_back();
  memo.put(key, without);
  return without;
}

// ---- independence ----

class IndependenceCounter {
 public:
  explicit IndependenceCounter(const Graph& g) : adj_(g.adjacency_masks()) {}

  std::vector<Integer> count(std::uint64_t mask) {
    if (mask == 0) return {1};
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    int best = -1;
    int best_deg = -1;
    for (auto m = mask; m; m &= m - 1) {
      const int v = __builtin_ctzll(m);
      const int d = __builtin_popcountll(adj_[v] & mask);
      if (d > best_deg) {
        best = v;
        best_deg = d;
      }
    }
    std::vector<Integer> r;
    if (best_deg == 0) {
      // (1+x)^|mask|
      const auto k = static_cast<std::size_t>(__builtin_popcountll(mask));
      r.assign(k + 1, 0);
      r[0] = 1;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j > 0; --j) r[j] += r[j - 1];
    } else {
      const auto bit = std::uint64_t{1} << best;
      r = count(mask & ~bit);
      const auto with = count(mask & ~bit & ~adj_[best]);
      if (r.size() < with.size() + 1) r.resize(with.size() + 1);
      for (std::size_t k = 0; k < with.size(); ++k) r[k + 1] += with[k];
    }
    memo_.emplace(mask, r);
    return r;
  }

 private:
  std::vector<std::uint64_t> adj_;
  std::unordered_map<std::uint64_t, std::vector<Integer>> memo_;
};

std::vector<Integer> independence_counts(const Graph& g) {
  if (!g.is_simple()) throw DomainError("independence polynomial requires a simple graph");
  if (g.order() > 64) throw ResourceError("independence polynomial limited to order 64");
  const auto full = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  return IndependenceCounter(g).count(full);
}

// ---- generalized colourings ----

// proper[c][U]: proper colourings of G[U] with c labelled colours.
std::vector<std::vector<Integer>> proper_colouring_table(const Graph& g, std::size_t max_colours) {
  const auto n = g.order();
  const auto adj = g.adjacency_masks();
  const std::size_t full = std::size_t{1} << n;
  std::vector<bool> independent(full, true);
  for (std::size_t s = 1; s < full; ++s) {
    const int v = __builtin_ctzll(s);
    const auto rest = s & (s - 1);
    independent[s] = independent[rest] && (adj[v] & rest) == 0;
  }
  std::vector<std::vector<Integer>> f(max_colours + 1, std::vector<Integer>(full, 0));
  f[0][0] = 1;
  for (std::size_t c = 1; c <= max_colours; ++c)
    for (std::size_t u = 0; u < full; ++u)
      for (std::size_t i = u;; i = (i - 1) & u) {
        if (independent[i]) f[c][u] += f[c - 1][u & ~i];
        if (i == 0) break;
      }
  return f;
}

Integer generalized_from_table(const std::vector<std::vector<Integer>>& f, std::size_t n, std::size_t total,
                               std::size_t proper) {
  Integer sum = 0;
  const std::size_t full = std::size_t{1} << n;
  const Integer improper = static_cast<unsigned long>(total - proper);
  for (std::size_t u = 0; u < full; ++u) {
    if (f[proper][u] == 0) continue;
    Integer w;
    mpz_pow_ui(w.get_mpz_t(), improper.get_mpz_t(), n - static_cast<std::size_t>(__builtin_popcountll(u)));
    sum += f[proper][u] * w;
  }
  return sum;
}

void require_gc_budget(const Graph& g) {
  if (!g.is_simple()) throw DomainError("generalized chromatic polynomial requires a simple graph");
  if (g.order() > kGenChromaticMaxOrder)
    throw ResourceError("generalized chromatic polynomial limited to order " +
                        std::to_string(kGenChromaticMaxOrder));
}

std::uint32_t nullity(const Graph& g) {
  return static_cast<std::uint32_t>(g.size() + connected_components(g) - g.order());
}

}  // namespace

Polynomial xi_poly(const Graph& g) {
  if (!g.is_simple()) throw DomainError("xi polynomial requires a simple graph at entry");
  return xi_rec(g);
}

Polynomial tutte_poly(const Graph& g) { return tutte_rec(g); }

Polynomial chromatic_poly(const Graph& g) {
  if (!g.is_simple()) throw DomainError("chromatic polynomial requires a simple graph");
  return chromatic_rec(g);
}

Polynomial chromatic_from_tutte(const Graph& g) {
  const auto n = g.order();
  const auto k = connected_components(g);
  auto t = tutte_poly(g).substitute({{"x", 1 - X()}, {"y", Polynomial(0)}});
  auto r = Polynomial::monomial("x", static_cast<std::uint32_t>(k)) * t;
  return (n - k) % 2 ? -r : r;
}

Polynomial flow_poly(const Graph& g) {
  auto r = tutte_poly(g).substitute({{"x", Polynomial(0)}, {"y", 1 - X()}});
  return nullity(g) % 2 ? -r : r;
}

Polynomial reliability_poly(const Graph& g) {
  const auto nu = nullity(g);
  const auto rank = static_cast<std::uint32_t>(g.order() - connected_components(g));
  const auto t1 = tutte_poly(g).substitute({{"x", Polynomial(1)}});
  const auto coeffs = t1.univariate_coefficients("y");
  const auto p = Polynomial::variable("p");
  Polynomial sum;
  for (std::uint32_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) sum += Polynomial::monomial("p", nu - j, coeffs[j]);
  return (1 - p).pow(rank) * sum;
}

std::vector<Integer> matching_counts(const Graph& g) {
  auto m = matching_rec(without_loops(g));
  m.resize(g.order() / 2 + 1);
  return m;
}

Polynomial matching_mu(const Graph& g) {
  const auto m = matching_counts(g);
  Polynomial r;
  for (std::uint32_t k = 0; k < m.size(); ++k)
    if (m[k] != 0)
      r += Polynomial::monomial("x", static_cast<std::uint32_t>(g.order() - 2 * k),
                                Rational(k % 2 ? -m[k] : m[k]));
  return r;
}

Polynomial matching_g(const Graph& g) { return Polynomial::univariate("x", matching_counts(g)); }

Polynomial matching_M(const Graph& g) {
  const auto m = matching_counts(g);
  Polynomial::Terms t;
  for (std::uint32_t k = 0; k < m.size(); ++k)
    if (m[k] != 0) t[{static_cast<std::uint32_t>(g.order() - 2 * k), k}] = Rational(m[k]);
  return Polynomial::from_terms({"w1", "w2"}, {t.begin(), t.end()});
}

Polynomial independence_poly(const Graph& g) { return Polynomial::univariate("x", independence_counts(g)); }

Polynomial clique_poly(const Graph& g) {
  if (!g.is_simple()) throw DomainError("clique polynomial requires a simple graph");
  return independence_poly(complement(g));
}

Polynomial vertex_cover_poly(const Graph& g) {
  auto c = independence_counts(g);
  c.resize(g.order() + 1);
  std::reverse(c.begin(), c.end());
  return Polynomial::univariate("x", c);
}

Integer count_generalized_colorings(const Graph& g, std::size_t total, std::size_t proper) {
  require_gc_budget(g);
  if (proper > total) throw DomainError("proper colours exceed total colours");
  const auto f = proper_colouring_table(g, proper);
  return generalized_from_table(f, g.order(), total, proper);
}

Polynomial gen_chromatic_poly(const Graph& g) {
  require_gc_budget(g);
  const auto n = g.order();
  const auto f = proper_colouring_table(g, n);
  std::vector<GridSample> samples;
  for (std::size_t x0 = n; x0 <= 2 * n; ++x0)
    for (std::size_t y0 = 0; y0 <= n; ++y0)
      samples.push_back({Rational(static_cast<unsigned long>(x0)), Rational(static_cast<unsigned long>(y0)),
                         Rational(generalized_from_table(f, n, x0, y0))});
  const auto d = static_cast<std::uint32_t>(n);
  return interpolate_bivariate(samples, d, d, "x", "y");
}

bool crec_join_check(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2, CrecCoefficients form) {
  if (!g1.has_vertex(v1) || !g2.has_vertex(v2)) throw DomainError("invalid join vertex");
  const auto c1 = covered_components_poly(g1);
  const auto c2 = covered_components_poly(g2);
  const auto c1d = covered_components_poly(delete_vertex(g1, v1));
  const auto c2d = covered_components_poly(delete_vertex(g2, v2));
  const auto h = covered_components_poly(one_point_join(g1, v1, g2, v2));
  const auto lhs = X() * Z() * h;
  const auto mixed = c1 * c2d + c1d * c2;
  const auto rhs = form == CrecCoefficients::standard
                       ? c1 * c2 + X() * (Z() - 1) * mixed + X() * X() * (1 - Z()) * c1d * c2d
                       : (1 + 2 * Z()) * c1 * c2 - X() * (1 + Z()) * mixed + X() * X() * (1 + Z()) * c1d * c2d;
  return lhs == rhs;
}

}  // namespace graphpoly
