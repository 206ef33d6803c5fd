#include <algorithm>

#include "graphpoly/errors.hpp"
#include "graphpoly/invariants.hpp"

namespace graphpoly {

namespace {

void require_simple(const Graph& g, const char* what) {
  if (!g.is_simple()) throw DomainError(std::string(what) + " requires a simple graph");
}

Polynomial from_descending(const std::vector<Integer>& c) {
  std::vector<Integer> asc(c.rbegin(), c.rend());
  return Polynomial::univariate("x", asc);
}

}  // namespace

std::vector<Integer> berkowitz(const std::vector<std::vector<Integer>>& m) {
  const auto n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("berkowitz: matrix is not square");
  std::vector<Integer> p{1};
  for (std::size_t r = 0; r < n; ++r) {
    // col = [1, -a_rr, -R S, -R M S, ..., -R M^(r-1) S], M the leading r x r block
    std::vector<Integer> col(r + 2);
    col[0] = 1;
    col[1] = -m[r][r];
    std::vector<Integer> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = m[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += m[r][i] * s[i];
      col[k + 2] = -dot;
      std::vector<Integer> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m[i][j] * s[j];
      s = std::move(next);
    }
    std::vector<Integer> q(r + 2);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) q[i] += col[i - j] * p[j];
    p = std::move(q);
  }
  return p;
}

Polynomial char_poly_adjacency(const Graph& g) {
  require_simple(g, "adjacency characteristic polynomial");
  const auto adj = g.adjacency();
  std::vector<std::vector<Integer>> m(g.order(), std::vector<Integer>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) m[i][j] = adj[i][j];
  return from_descending(berkowitz(m));
}

Polynomial char_poly_laplacian(const Graph& g) {
  require_simple(g, "Laplacian characteristic polynomial");
  const auto adj = g.adjacency();
  std::vector<std::vector<Integer>> m(g.order(), std::vector<Integer>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) m[i][j] = -Integer(adj[i][j]);
    m[i][i] = static_cast<unsigned long>(g.degree(static_cast<Vertex>(i + 1)));
  }
  return from_descending(berkowitz(m));
}

bool char_recurrence_check(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (!g1.has_vertex(v1) || !g2.has_vertex(v2)) throw DomainError("invalid join vertex");
  const auto h = bridge_join(g1, v1, g2, v2);
  const auto lhs = char_poly_adjacency(h);
  const auto rhs = char_poly_adjacency(g1) * char_poly_adjacency(g2) -
                   char_poly_adjacency(delete_vertex(g1, v1)) * char_poly_adjacency(delete_vertex(g2, v2));
  return lhs == rhs;
}

}  // namespace graphpoly
