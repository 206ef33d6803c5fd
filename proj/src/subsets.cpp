#include <algorithm>
#include <functional>
#include <numeric>

#include "graphpoly/errors.hpp"
#include "graphpoly/invariants.hpp"

namespace graphpoly {

namespace {

class SubsetWalker {
 public:
  explicit SubsetWalker(const Graph& g, SubsetStatistics& out)
      : edges_(g.edges()),
        parent_(g.order()),
        size_(g.order(), 1),
        degree_(g.order(), 0),
        components_(g.order()),
        isolated_(g.order()),
        out_(out) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  void run() { walk(0, 0); }

 private:
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  void bump(std::size_t v, std::uint32_t by) {
    if (degree_[v] == 0) --isolated_;
    if (by % 2 == 1) odd_ += degree_[v] % 2 == 0 ? 1 : -1;
    degree_[v] += by;
  }

  void unbump(std::size_t v, std::uint32_t by) {
    degree_[v] -= by;
    if (by % 2 == 1) odd_ += degree_[v] % 2 == 0 ? -1 : 1;
    if (degree_[v] == 0) ++isolated_;
  }

  void walk(std::size_t i, std::size_t a) {
    if (i == edges_.size()) {
      ++out_.counts[a][components_][components_ - isolated_];
      if (odd_ == 0) ++out_.eulerian[a];
      return;
    }
    walk(i + 1, a);
    const auto u = edges_[i].u - 1;
    const auto v = edges_[i].v - 1;
    if (u == v) {
      bump(u, 2);
      walk(i + 1, a + 1);
      unbump(u, 2);
      return;
    }
    bump(u, 1);
    bump(v, 1);
    auto ru = find(u);
    auto rv = find(v);
    const bool merged = ru != rv;
    if (merged) {
      if (size_[ru] < size_[rv]) std::swap(ru, rv);
      parent_[rv] = ru;
      size_[ru] += size_[rv];
      --components_;
    }
    walk(i + 1, a + 1);
    if (merged) {
      parent_[rv] = rv;
      size_[ru] -= size_[rv];
      ++components_;
    }
    unbump(v, 1);
    unbump(u, 1);
  }

  const std::vector<Edge>& edges_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::uint32_t> degree_;
  std::size_t components_;
  std::size_t isolated_;
  long odd_ = 0;
  SubsetStatistics& out_;
};

Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

// Depth-first walk over vertex subsets in index order, pruning as soon as a
// vertex whose whole closed neighbourhood has been decided is undominated.
void walk_dominating(const Graph& g, const std::function<void(std::uint64_t)>& visit) {
  const auto n = g.order();
  if (n > kDominationMaxOrder)
    throw ResourceError("domination polynomial limited to order " + std::to_string(kDominationMaxOrder));
  const auto adj = g.adjacency_masks();
  std::vector<std::uint64_t> closed(n);
  std::vector<std::uint64_t> settle(n, 0);  // settle[i]: vertices whose N[.] ends at i
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] = adj[v] | (std::uint64_t{1} << v);
    settle[63 - __builtin_clzll(closed[v])] |= std::uint64_t{1} << v;
  }
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t chosen,
                                                                           std::uint64_t covered) {
    if (i == n) {
      visit(chosen);
      return;
    }
    const auto with = covered | closed[i];
    if ((with & settle[i]) == settle[i]) rec(i + 1, chosen | (std::uint64_t{1} << i), with);
    if ((covered & settle[i]) == settle[i]) rec(i + 1, chosen, covered);
  };
  rec(0, 0, 0);
}

}  // namespace

SubsetStatistics subset_statistics(const Graph& g) {
  if (g.size() > kSubsetMaxSize)
    throw ResourceError("edge-subset expansion limited to " + std::to_string(kSubsetMaxSize) +
                        " edges (graph has " + std::to_string(g.size()) + ")");
  SubsetStatistics s;
  s.order = g.order();
  s.size = g.size();
  s.components = connected_components(g);
  s.counts.assign(g.size() + 1, std::vector<std::vector<std::uint64_t>>(
                                    g.order() + 1, std::vector<std::uint64_t>(g.order() + 1, 0)));
  s.eulerian.assign(g.size() + 1, 0);
  SubsetWalker(g, s).run();
  return s;
}

Polynomial covered_components_poly(const Graph& g) {
  const auto s = subset_statistics(g);
  Polynomial::Terms t;
  for (std::uint32_t a = 0; a <= s.size; ++a)
    for (std::uint32_t k = 0; k <= s.order; ++k)
      for (std::uint32_t c = 0; c <= s.order; ++c)
        if (s.counts[a][k][c]) t[{k, a, c}] += Rational(to_integer(s.counts[a][k][c]));
  return Polynomial::from_terms({"x", "y", "z"}, {t.begin(), t.end()});
}

Polynomial partition_Z(const Graph& g) {
  const auto s = subset_statistics(g);
  Polynomial::Terms t;
  for (std::uint32_t a = 0; a <= s.size; ++a)
    for (std::uint32_t k = 0; k <= s.order; ++k)
      for (std::uint32_t c = 0; c <= s.order; ++c)
        if (s.counts[a][k][c]) t[{k, a}] += Rational(to_integer(s.counts[a][k][c]));
  return Polynomial::from_terms({"q", "w"}, {t.begin(), t.end()});
}

Polynomial euler_poly(const Graph& g) {
  const auto s = subset_statistics(g);
  std::vector<Integer> c(s.size + 1);
  for (std::size_t a = 0; a <= s.size; ++a) c[a] = to_integer(s.eulerian[a]);
  return Polynomial::univariate("x", c);
}

Polynomial tutte_subset_expansion(const Graph& g) {
  const auto s = subset_statistics(g);
  // sum (x-1)^(k(A)-k(E)) (y-1)^(k(A)+|A|-n)
  Polynomial::Terms shifted;  // in X = x-1, Y = y-1
  for (std::uint32_t a = 0; a <= s.size; ++a)
    for (std::uint32_t k = 0; k <= s.order; ++k)
      for (std::uint32_t c = 0; c <= s.order; ++c)
        if (s.counts[a][k][c])
          shifted[{static_cast<std::uint32_t>(k - s.components),
                   static_cast<std::uint32_t>(k + a - s.order)}] += Rational(to_integer(s.counts[a][k][c]));
  const auto p = Polynomial::from_terms({"X", "Y"}, {shifted.begin(), shifted.end()});
  return p.substitute({{"X", Polynomial::variable("x") - 1}, {"Y", Polynomial::variable("y") - 1}});
}

Polynomial domination_poly(const Graph& g) {
  std::vector<Integer> hist(g.order() + 1);
  walk_dominating(g, [&](std::uint64_t s) { ++hist[__builtin_popcountll(s)]; });
  return Polynomial::univariate("x", hist);
}

std::vector<std::uint64_t> dominating_sets(const Graph& g) {
  std::vector<std::uint64_t> out;
  walk_dominating(g, [&](std::uint64_t s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphpoly
