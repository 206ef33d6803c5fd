#pragma once

// Independent reference computations for the invariants tests. Each works
// directly from a definition by exhaustive enumeration or exact linear algebra.

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/polynomial.hpp"

namespace oracle {

using graphpoly::Graph;
using graphpoly::Integer;
using graphpoly::Polynomial;
using graphpoly::Rational;
using graphpoly::Vertex;

// Fraction-free Bareiss determinant.
inline Integer bareiss(std::vector<std::vector<Integer>> a) {
  const auto n = a.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// det(xI - M) by exact evaluation at x = 0..n and interpolation.
inline Polynomial char_poly_by_interpolation(const std::vector<std::vector<Integer>>& m) {
  const auto n = m.size();
  std::vector<Rational> nodes, values;
  for (std::size_t t = 0; t <= n; ++t) {
    auto a = m;
    for (auto& row : a)
      for (auto& v : row) v = -v;
    for (std::size_t i = 0; i < n; ++i) a[i][i] += static_cast<unsigned long>(t);
    nodes.emplace_back(static_cast<unsigned long>(t));
    values.emplace_back(bareiss(a));
  }
  return Polynomial::univariate("x", graphpoly::interpolate_univariate(nodes, values));
}

inline std::vector<std::vector<Integer>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<Integer>> a(g.order(), std::vector<Integer>(g.order()));
  for (const auto& e : g.edges()) {
    a[e.u - 1][e.v - 1] += 1;
    if (!e.is_loop()) a[e.v - 1][e.u - 1] += 1;
  }
  return a;
}

inline std::vector<std::vector<Integer>> laplacian_matrix(const Graph& g) {
  auto a = adjacency_matrix(g);
  std::vector<std::vector<Integer>> l(g.order(), std::vector<Integer>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i) {
    Integer d = 0;
    for (std::size_t j = 0; j < g.order(); ++j) {
      l[i][j] = -a[i][j];
      d += a[i][j];
    }
    l[i][i] += d;
  }
  return l;
}

inline Polynomial pow_var(const std::string& v, std::uint32_t k) { return Polynomial::monomial(v, k); }

// Vertex-subset enumerations.
inline std::vector<std::uint64_t> neighbourhoods(const Graph& g) {
  std::vector<std::uint64_t> nb(g.order(), 0);
  for (const auto& e : g.edges())
    if (!e.is_loop()) {
      nb[e.u - 1] |= std::uint64_t{1} << (e.v - 1);
      nb[e.v - 1] |= std::uint64_t{1} << (e.u - 1);
    }
  return nb;
}

inline bool is_dominating(const std::vector<std::uint64_t>& nb, std::uint64_t s, std::size_t n) {
  std::uint64_t cov = s;
  for (std::size_t v = 0; v < n; ++v)
    if ((s >> v) & 1U) cov |= nb[v];
  return cov == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

inline std::vector<std::uint64_t> dominating_sets(const Graph& g) {
  const auto nb = neighbourhoods(g);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
    if (is_dominating(nb, s, g.order())) out.push_back(s);
  return out;
}

inline Polynomial domination(const Graph& g) {
  Polynomial r;
  for (auto s : oracle::dominating_sets(g)) r += pow_var("x", __builtin_popcountll(s));
  return r;
}

inline Polynomial independence(const Graph& g) {
  const auto nb = neighbourhoods(g);
  Polynomial r;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < g.order() && ok; ++v)
      if ((s >> v) & 1U) ok = (nb[v] & s) == 0;
    if (ok) r += pow_var("x", __builtin_popcountll(s));
  }
  return r;
}

inline Polynomial cliques(const Graph& g) {
  const auto nb = neighbourhoods(g);
  Polynomial r;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < g.order() && ok; ++v)
      if ((s >> v) & 1U) ok = ((nb[v] | (std::uint64_t{1} << v)) & s) == s;
    if (ok) r += pow_var("x", __builtin_popcountll(s));
  }
  return r;
}

inline Polynomial vertex_covers(const Graph& g) {
  Polynomial r;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    bool ok = true;
    for (const auto& e : g.edges()) ok = ok && (((s >> (e.u - 1)) & 1U) || ((s >> (e.v - 1)) & 1U));
    if (ok) r += pow_var("x", __builtin_popcountll(s));
  }
  return r;
}

// m_k by enumerating edge subsets.
inline std::vector<Integer> matchings(const Graph& g) {
  std::vector<Integer> m(g.order() / 2 + 1);
  const auto& es = g.edges();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << es.size()); ++s) {
    std::uint64_t used = 0;
    bool ok = true;
    std::size_t k = 0;
    for (std::size_t i = 0; i < es.size() && ok; ++i) {
      if (!((s >> i) & 1U)) continue;
      const auto bu = std::uint64_t{1} << (es[i].u - 1);
      const auto bv = std::uint64_t{1} << (es[i].v - 1);
      ok = !es[i].is_loop() && !(used & bu) && !(used & bv);
      used |= bu | bv;
      ++k;
    }
    if (ok) m[k] += 1;
  }
  return m;
}

// Spanning subgraph statistics computed afresh for each edge subset.
struct SubsetRecord {
  std::size_t edges;
  std::size_t components;
  std::size_t covered;
  bool eulerian;
};

template <typename Fn>
void for_each_edge_subset(const Graph& g, Fn&& fn) {
  const auto& es = g.edges();
  const auto n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << es.size()); ++s) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    std::vector<std::size_t> deg(n, 0);
    std::size_t a = 0;
    for (std::size_t i = 0; i < es.size(); ++i)
      if ((s >> i) & 1U) {
        ++a;
        deg[es[i].u - 1]++;
        deg[es[i].v - 1]++;
        parent[find(es[i].u - 1)] = find(es[i].v - 1);
      }
    std::vector<bool> root_covered(n, false);
    std::size_t k = 0, c = 0;
    bool even = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (find(v) == v) ++k;
      if (deg[v] > 0) root_covered[find(v)] = true;
      even = even && deg[v] % 2 == 0;
    }
    for (std::size_t v = 0; v < n; ++v) c += root_covered[v];
    fn(SubsetRecord{a, k, c, even});
  }
}

inline Polynomial covered_components(const Graph& g) {
  Polynomial r;
  for_each_edge_subset(g, [&](const SubsetRecord& s) {
    r += pow_var("x", s.components) * pow_var("y", s.edges) * pow_var("z", s.covered);
  });
  return r;
}

inline Polynomial euler(const Graph& g) {
  Polynomial r;
  for_each_edge_subset(g, [&](const SubsetRecord& s) {
    if (s.eulerian) r += pow_var("x", s.edges);
  });
  return r;
}

// sum_A (-1)^(|E|-|A|) x^(nullity(A))
inline Polynomial flow(const Graph& g) {
  Polynomial r;
  for_each_edge_subset(g, [&](const SubsetRecord& s) {
    const auto term = pow_var("x", s.edges + s.components - g.order());
    if ((g.size() - s.edges) % 2) r -= term;
    else r += term;
  });
  return r;
}

// Probability that the graph stays with as many components as G when each
// edge fails independently with probability p.
inline Polynomial reliability(const Graph& g) {
  std::size_t full_components = g.order();
  for_each_edge_subset(g, [&](const SubsetRecord& s) { full_components = std::min(full_components, s.components); });
  const auto p = Polynomial::variable("p");
  Polynomial r;
  for_each_edge_subset(g, [&](const SubsetRecord& s) {
    if (s.components == full_components)
      r += (1 - p).pow(static_cast<std::uint32_t>(s.edges)) * p.pow(static_cast<std::uint32_t>(g.size() - s.edges));
  });
  return r;
}

// All maps V -> {0..total-1}; colours below `proper` are proper.
inline Integer generalized_colorings(const Graph& g, std::size_t total, std::size_t proper) {
  const auto n = g.order();
  if (total == 0) return n == 0 ? 1 : 0;
  std::vector<std::size_t> c(n, 0);
  Integer count = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : g.edges())
      if (c[e.u - 1] < proper && c[e.u - 1] == c[e.v - 1]) ok = false;
    if (ok) count += 1;
    std::size_t i = 0;
    while (i < n && ++c[i] == total) c[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace oracle
