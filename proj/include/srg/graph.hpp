#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srg {

/// Simple graph on [0, v) backed by one bitset row per vertex.
/// Symmetry and irreflexivity are enforced by the builder; a frozen Graph is
/// immutable and safe for concurrent reads.
class Graph {
 public:
  class Builder {
   public:
    explicit Builder(std::uint32_t v) : v_(v), words_((v + 63) / 64), bits_(std::size_t(v) * ((v + 63) / 64), 0) {}

    void add_edge(std::uint32_t x, std::uint32_t y) {
      if (x >= v_ || y >= v_) throw std::out_of_range("graph: vertex out of range");
      if (x == y) throw std::invalid_argument("graph: loops not allowed");
      bits_[std::size_t(x) * words_ + y / 64] |= std::uint64_t(1) << (y % 64);
      bits_[std::size_t(y) * words_ + x / 64] |= std::uint64_t(1) << (x % 64);
    }

    Graph build() { return Graph(v_, words_, std::move(bits_)); }

   private:
    std::uint32_t v_, words_;
    std::vector<std::uint64_t> bits_;
  };

  Graph() : v_(0), words_(0) {}

  /// Builds from a predicate evaluated once per unordered pair.
  static Graph from_predicate(std::uint32_t v, const std::function<bool(std::uint32_t, std::uint32_t)>& adj) {
    Builder b(v);
    for (std::uint32_t x = 0; x < v; ++x)
      for (std::uint32_t y = x + 1; y < v; ++y)
        if (adj(x, y)) b.add_edge(x, y);
    return b.build();
  }

  std::uint32_t v() const { return v_; }
  std::uint32_t words() const { return words_; }

  bool adjacent(std::uint32_t x, std::uint32_t y) const {
    return (bits_[std::size_t(x) * words_ + y / 64] >> (y % 64)) & 1;
  }

  const std::uint64_t* row(std::uint32_t x) const { return bits_.data() + std::size_t(x) * words_; }

  std::uint32_t degree(std::uint32_t x) const {
    const std::uint64_t* r = row(x);
    std::uint32_t d = 0;
    for (std::uint32_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  std::uint32_t common_neighbors(std::uint32_t x, std::uint32_t y) const {
    const std::uint64_t *a = row(x), *b = row(y);
    std::uint32_t c = 0;
    for (std::uint32_t w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
  }

  std::uint64_t edge_count() const {
    std::uint64_t s = 0;
    for (std::uint32_t x = 0; x < v_; ++x) s += degree(x);
    return s / 2;
  }

  bool operator==(const Graph& o) const { return v_ == o.v_ && bits_ == o.bits_; }

  /// Neighbor list in ascending order.
  std::vector<std::uint32_t> neighbors(std::uint32_t x) const {
    std::vector<std::uint32_t> out;
    const std::uint64_t* r = row(x);
    for (std::uint32_t w = 0; w < words_; ++w) {
      std::uint64_t m = r[w];
      while (m) {
        out.push_back(w * 64 + std::countr_zero(m));
        m &= m - 1;
      }
    }
    return out;
  }

 private:
  Graph(std::uint32_t v, std::uint32_t words, std::vector<std::uint64_t> bits)
      : v_(v), words_(words), bits_(std::move(bits)) {}

  std::uint32_t v_, words_;
  std::vector<std::uint64_t> bits_;
};

/// Induced subgraph on `vertices`; resulting vertex i corresponds to vertices[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& vertices) {
  Graph::Builder b(static_cast<std::uint32_t>(vertices.size()));
  for (std::uint32_t i = 0; i < vertices.size(); ++i)
    for (std::uint32_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  return b.build();
}

inline Graph complement(const Graph& g) {
  Graph::Builder b(g.v());
  for (std::uint32_t x = 0; x < g.v(); ++x)
    for (std::uint32_t y = x + 1; y < g.v(); ++y)
      if (!g.adjacent(x, y)) b.add_edge(x, y);
  return b.build();
}

/// Image of g under vertex bijection perm: vertex x becomes perm[x].
inline Graph relabel(const Graph& g, const std::vector<std::uint32_t>& perm) {
  Graph::Builder b(g.v());
  for (std::uint32_t x = 0; x < g.v(); ++x)
    for (std::uint32_t y = x + 1; y < g.v(); ++y)
      if (g.adjacent(x, y)) b.add_edge(perm[x], perm[y]);
  return b.build();
}

// --- graph6 format (McKay's sparse graph formats specification) ---

namespace graph6 {

inline constexpr std::uint64_t kMaxVertices = 100000;

inline std::string encode(const Graph& g) {
  std::uint64_t n = g.v();
  if (n > kMaxVertices) throw std::invalid_argument("graph6: too many vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  // upper triangle, column by column, packed big-endian into 6-bit groups
  std::uint32_t acc = 0, nbits = 0;
  for (std::uint32_t y = 1; y < n; ++y) {
    for (std::uint32_t x = 0; x < y; ++x) {
      acc = (acc << 1) | (g.adjacent(x, y) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph decode(const std::string& s_in) {
  std::string s = s_in;
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty input");
  std::size_t pos = 0;
  std::uint64_t n;
  if (s[0] != '~') {
    n = static_cast<unsigned char>(s[0]) - 63;
    pos = 1;
  } else if (s.size() >= 4 && s[1] != '~') {
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (static_cast<unsigned char>(s[i]) - 63);
    pos = 4;
  } else if (s.size() >= 8) {
    n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | (static_cast<unsigned char>(s[i]) - 63);
    pos = 8;
  } else {
    throw std::invalid_argument("graph6: malformed header");
  }
  if (n > kMaxVertices) throw std::invalid_argument("graph6: too many vertices");
  std::uint64_t need = (n * (n - 1) / 2 + 5) / 6;
  if (s.size() - pos != need) throw std::invalid_argument("graph6: wrong payload length");
  Graph::Builder b(static_cast<std::uint32_t>(n));
  std::uint32_t bit = 0;
  for (std::uint32_t y = 1; y < n; ++y) {
    for (std::uint32_t x = 0; x < y; ++x, ++bit) {
      unsigned char c = static_cast<unsigned char>(s[pos + bit / 6]);
      if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad byte");
      if ((c - 63) >> (5 - bit % 6) & 1) b.add_edge(x, y);
    }
  }
  return b.build();
}

}  // namespace graph6

}  // namespace srg
