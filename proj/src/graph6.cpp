#include "graphpoly/graph6.hpp"

#include <cstdint>

#include "graphpoly/errors.hpp"

namespace graphpoly {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

void encode_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
  } else if (n <= 68719476735ULL) {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
  } else {
    throw UnsupportedFormatError("order too large for graph6");
  }
}

class Reader {
 public:
  Reader(std::string_view text, std::size_t base) : s_(text), base_(base) {}

  std::size_t offset() const { return base_ + pos_; }
  bool done() const { return pos_ >= s_.size(); }

  // Next 6-bit group.
  std::uint32_t group(const char* what) {
    if (pos_ >= s_.size()) throw ParseError(std::string("truncated ") + what, offset());
    const auto c = static_cast<unsigned char>(s_[pos_]);
    if (c < 63 || c > 126) throw ParseError("character out of range", offset());
    ++pos_;
    return c - 63U;
  }

  std::size_t order() {
    if (pos_ < s_.size() && s_[pos_] == '~') {
      ++pos_;
      int groups = 3;
      if (pos_ < s_.size() && s_[pos_] == '~') {
        ++pos_;
        groups = 6;
      }
      std::size_t n = 0;
      for (int i = 0; i < groups; ++i) n = (n << 6U) | group("order field");
      return n;
    }
    return group("header");
  }

  std::size_t remaining_bits() const { return 6 * (s_.size() - pos_); }

 private:
  std::string_view s_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string write_graph6(const Graph& g) {
  if (!g.is_simple()) throw UnsupportedFormatError("graph6 cannot encode loops or parallel edges");
  std::string out;
  const auto n = g.order();
  encode_order(out, n);
  const auto adj = g.adjacency();
  std::uint32_t acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1U) | (adj[i][j] ? 1U : 0U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);
  Reader r(text, base);
  const auto n = r.order();
  const auto needed_bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const auto needed_bytes = (needed_bits + 5) / 6;
  if (r.remaining_bits() / 6 < needed_bytes)
    throw ParseError("truncated bit vector: expected " + std::to_string(needed_bytes) + " bytes",
                     r.offset() + r.remaining_bits() / 6);
  if (r.remaining_bits() / 6 > needed_bytes)
    throw ParseError("trailing characters after bit vector", r.offset() + needed_bytes);
  Graph g(n);
  std::vector<Edge> edges;
  std::uint32_t cur = 0;
  int left = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (left == 0) {
        cur = r.group("bit vector");
        left = 6;
      }
      --left;
      if ((cur >> left) & 1U) edges.emplace_back(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
    }
  }
  return Graph(n, std::move(edges));
}

std::string write_sparse6(const Graph& g) {
  const auto n = g.order();
  std::string out(":");
  encode_order(out, n);
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  // edges sorted by larger endpoint, then smaller (0-based)
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (const auto& e : g.edges()) es.emplace_back(e.v - 1, e.u - 1);
  std::sort(es.begin(), es.end());

  std::vector<bool> bits;
  auto put = [&](std::size_t x, std::size_t width) {
    for (std::size_t b = width; b-- > 0;) bits.push_back((x >> b) & 1U);
  };
  std::size_t v = 0;
  for (const auto& [hi, lo] : es) {
    if (hi == v) {
      bits.push_back(false);
      put(lo, k);
    } else if (hi == v + 1) {
      bits.push_back(true);
      put(lo, k);
      v = hi;
    } else {
      bits.push_back(true);
      put(hi, k);
      bits.push_back(false);
      put(lo, k);
      v = hi;
    }
  }
  const auto pad = (6 - bits.size() % 6) % 6;
  if (k < 6 && n == (std::size_t{1} << k) && n >= 2 && v == n - 2 && pad >= k + 1) {
    bits.push_back(false);
    for (std::size_t i = 1; i < pad; ++i) bits.push_back(true);
  } else {
    for (std::size_t i = 0; i < pad; ++i) bits.push_back(true);
  }
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    std::uint32_t x = 0;
    for (std::size_t b = 0; b < 6; ++b) x = (x << 1U) | (bits[i + b] ? 1U : 0U);
    out.push_back(static_cast<char>(x + 63));
  }
  return out;
}

Graph parse_sparse6(std::string_view text) {
  text = trim(text);
  std::size_t base = 0;
  if (text.starts_with(kSparse6Header)) {
    text.remove_prefix(kSparse6Header.size());
    base = kSparse6Header.size();
  }
  if (text.empty() || text.front() != ':') throw ParseError("sparse6 must start with ':'", base);
  text.remove_prefix(1);
  Reader r(text, base + 1);
  if (r.done()) throw ParseError("truncated header", r.offset());
  const auto n = r.order();
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;

  std::vector<bool> bits;
  while (!r.done()) {
    const auto x = r.group("edge data");
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1U);
  }
  std::vector<Edge> edges;
  std::size_t v = 0;
  std::size_t i = 0;
  while (i + 1 + k <= bits.size()) {
    const bool b = bits[i++];
    std::size_t x = 0;
    for (std::size_t t = 0; t < k; ++t) x = (x << 1U) | (bits[i++] ? 1U : 0U);
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      edges.emplace_back(static_cast<Vertex>(x + 1), static_cast<Vertex>(v + 1));
    }
  }
  return Graph(n, std::move(edges));
}

Graph parse_graph_line(std::string_view text) {
  auto t = trim(text);
  if (t.starts_with(':') || t.starts_with(kSparse6Header)) return parse_sparse6(t);
  if (t.starts_with(';')) throw ParseError("incremental sparse6 is not supported", 0);
  return parse_graph6(t);
}

std::string write_graph_line(const Graph& g) {
  return g.is_simple() ? write_graph6(g) : write_sparse6(g);
}

std::vector<Graph> read_graph_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      out.push_back(parse_graph_line(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

}  // namespace graphpoly
