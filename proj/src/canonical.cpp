#include "graphpoly/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "graphpoly/errors.hpp"

namespace graphpoly {

namespace {

using Cells = std::vector<std::uint32_t>;  // vertex index -> cell index (ordered partition)
using Matrix = std::vector<std::vector<std::uint32_t>>;
using Perm = std::vector<Vertex>;  // 0-based images

struct Orbits {
  explicit Orbits(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> parent;
};

std::uint32_t cell_count(const Cells& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

class Search {
 public:
  Search(const Matrix& m, Cells initial) : n_(m.size()), m_(m), initial_(std::move(initial)) {}

  void run() {
    Cells root = refine(initial_);
    struct Level {
      Cells cells;
      std::vector<std::uint32_t> members;
      std::uint32_t chosen;
    };
    std::vector<Level> path;
    Cells cur = root;
    while (!discrete(cur)) {
      auto members = target(cur);
      const auto v = members.front();
      path.push_back({cur, members, v});
      cur = refine(individualize(cur, v));
    }
    first_ = cur;
    first_inv_ = inverse(cur);
    first_cert_ = certificate(cur);
    best_ = first_;
    best_cert_ = first_cert_;
    best_inv_ = first_inv_;

    automorphisms_ = 1;
    for (std::size_t k = path.size(); k-- > 0;) {
      std::vector<std::uint32_t> prefix;
      for (std::size_t j = 0; j < k; ++j) prefix.push_back(path[j].chosen);
      std::vector<std::uint32_t> processed{path[k].chosen};
      for (auto w : path[k].members) {
        if (w == path[k].chosen) continue;
        auto orb = orbits_fixing(prefix);
        if (std::any_of(processed.begin(), processed.end(),
                        [&](std::uint32_t p) { return orb.find(p) == orb.find(w); }))
          continue;
        processed.push_back(w);
        auto extended = prefix;
        extended.push_back(w);
        explore(refine(individualize(path[k].cells, w)), extended);
      }
      auto orb = orbits_fixing(prefix);
      const auto rep = orb.find(path[k].chosen);
      std::size_t size = 0;
      for (std::uint32_t u = 0; u < n_; ++u)
        if (orb.find(u) == rep) ++size;
      automorphisms_ *= static_cast<unsigned long>(size);
    }
  }

  const Cells& best() const { return best_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Integer& automorphisms() const { return automorphisms_; }

 private:
  static bool discrete(const Cells& c) { return cell_count(c) == c.size(); }

  static Cells inverse(const Cells& c) {
    Cells inv(c.size());
    for (std::uint32_t v = 0; v < c.size(); ++v) inv[c[v]] = v;
    return inv;
  }

  // Splits cells by (cell, loop multiplicity, multiplicities into every cell)
  // until stable. New cells are ordered by signature, so the result does not
  // depend on vertex names.
  Cells refine(Cells cells) const {
    std::vector<std::vector<std::uint32_t>> sig(n_);
    std::vector<std::uint32_t> order(n_);
    while (true) {
      const auto k = cell_count(cells);
      if (k == n_) return cells;
      for (std::uint32_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.assign(k + 2, 0);
        s[0] = cells[v];
        s[1] = m_[v][v];
        for (std::uint32_t u = 0; u < n_; ++u)
          if (u != v) s[2 + cells[u]] += m_[v][u];
      }
      std::iota(order.begin(), order.end(), 0U);
      std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });
      Cells next(n_);
      std::uint32_t id = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
        next[order[i]] = id;
      }
      if (id + 1 == k) return cells;
      cells = std::move(next);
    }
  }

  static Cells individualize(const Cells& c, std::uint32_t v) {
    Cells out(c);
    for (std::uint32_t u = 0; u < c.size(); ++u)
      if (c[u] > c[v] || (c[u] == c[v] && u != v)) ++out[u];
    return out;
  }

  static std::vector<std::uint32_t> target(const Cells& c) {
    std::vector<std::uint32_t> size(c.size(), 0);
    for (auto x : c) ++size[x];
    std::uint32_t cell = 0;
    while (size[cell] <= 1) ++cell;
    std::vector<std::uint32_t> members;
    for (std::uint32_t v = 0; v < c.size(); ++v)
      if (c[v] == cell) members.push_back(v);
    return members;
  }

  std::vector<std::uint32_t> certificate(const Cells& leaf) const {
    const auto inv = inverse(leaf);
    std::vector<std::uint32_t> cert;
    cert.reserve(n_ * (n_ + 1) / 2);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = i; j < n_; ++j) cert.push_back(m_[inv[i]][inv[j]]);
    return cert;
  }

  Orbits orbits_fixing(const std::vector<std::uint32_t>& prefix) const {
    Orbits orb(n_);
    for (const auto& g : generators_) {
      if (std::any_of(prefix.begin(), prefix.end(), [&](auto p) { return g[p] != p; })) continue;
      for (std::uint32_t v = 0; v < n_; ++v) orb.unite(v, g[v]);
    }
    return orb;
  }

  void add_generator(const Cells& leaf, const Cells& target_inv) {
    Perm g(n_);
    for (std::uint32_t v = 0; v < n_; ++v) g[v] = target_inv[leaf[v]];
    generators_.push_back(std::move(g));
  }

  // Returns true when a leaf equivalent to the first leaf was found; the
  // caller's whole subtree is then an automorphic image of an explored one.
  bool explore(const Cells& cells, const std::vector<std::uint32_t>& prefix) {
    if (++nodes_ > kCanonicalNodeBudget)
      throw ResourceError("canonical labelling exceeded its search budget");
    if (discrete(cells)) {
      auto cert = certificate(cells);
      if (cert == first_cert_) {
        add_generator(cells, first_inv_);
        return true;
      }
      if (cert == best_cert_) {
        add_generator(cells, best_inv_);
        return false;
      }
      if (cert < best_cert_) {
        best_ = cells;
        best_inv_ = inverse(cells);
        best_cert_ = std::move(cert);
      }
      return false;
    }
    const auto members = target(cells);
    std::vector<std::uint32_t> processed;
    for (auto w : members) {
      auto orb = orbits_fixing(prefix);
      if (std::any_of(processed.begin(), processed.end(),
                      [&](std::uint32_t p) { return orb.find(p) == orb.find(w); }))
        continue;
      processed.push_back(w);
      auto extended = prefix;
      extended.push_back(w);
      if (explore(refine(individualize(cells, w)), extended)) return true;
    }
    return false;
  }

  std::size_t n_;
  const Matrix& m_;
  Cells initial_;
  Cells first_, first_inv_, best_, best_inv_;
  std::vector<std::uint32_t> first_cert_, best_cert_;
  std::vector<Perm> generators_;
  Integer automorphisms_ = 1;
  std::size_t nodes_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const std::uint32_t> colors) {
  const auto n = g.order();
  if (!colors.empty() && colors.size() != n) throw DomainError("one colour per vertex required");
  Cells initial(n, 0);
  if (!colors.empty()) {
    std::vector<std::uint32_t> distinct(colors.begin(), colors.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v)
      initial[v] = static_cast<std::uint32_t>(
          std::lower_bound(distinct.begin(), distinct.end(), colors[v]) - distinct.begin());
  }
  const auto m = g.adjacency();
  CanonicalLabeling out;
  out.form.order = n;
  if (n == 0) return out;

  Search search(m, initial);
  search.run();
  const auto& best = search.best();

  out.labels.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.labels[v] = best[v] + 1;
  out.generators = search.generators();
  out.form.automorphism_count = search.automorphisms();

  Orbits orb(n);
  for (const auto& gen : out.generators)
    for (std::uint32_t v = 0; v < n; ++v) orb.unite(v, gen[v]);
  out.orbits.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) out.orbits[v] = orb.find(v) + 1;

  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.emplace_back(out.labels[e.u - 1], out.labels[e.v - 1]);
  std::sort(edges.begin(), edges.end());
  out.form.edges = std::move(edges);
  if (!colors.empty()) {
    out.form.colors.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.form.colors[best[v]] = colors[v];
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::string canonical_key(const Graph& g) {
  const auto form = canonical_form(g);
  std::string key;
  const auto n = form.order;
  auto put = [&](std::uint32_t x) {
    if (n < 255) {
      key.push_back(static_cast<char>(x));
    } else {
      for (int s = 0; s < 32; s += 8) key.push_back(static_cast<char>((x >> s) & 0xFFU));
    }
  };
  key.push_back(static_cast<char>(n & 0xFFU));
  key.push_back(static_cast<char>((n >> 8) & 0xFFU));
  for (const auto& e : form.edges) {
    put(e.u);
    put(e.v);
  }
  return key;
}

Graph canonical_graph(const Graph& g) { return canonical_form(g).graph(); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool are_isomorphic_rooted(const Graph& a, Vertex ra, const Graph& b, Vertex rb) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (!a.has_vertex(ra) || !b.has_vertex(rb)) throw DomainError("root outside graph");
  std::vector<std::uint32_t> ca(a.order(), 0);
  std::vector<std::uint32_t> cb(b.order(), 0);
  ca[ra - 1] = 1;
  cb[rb - 1] = 1;
  return canonical_labeling(a, ca).form == canonical_labeling(b, cb).form;
}

}  // namespace graphpoly
