#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace pnmax {

// Fixed-width vertex subset. Wide enough for every graph the library
// accepts (128 vertices); the exact solvers impose tighter limits of
// their own.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 128;

  constexpr VertexSet() = default;

  static VertexSet single(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  static VertexSet full(int n) {
    assert(n >= 0 && n <= kMaxVertices);
    VertexSet s;
    if (n >= 64) {
      s.w_[0] = ~std::uint64_t{0};
      s.w_[1] = (n == 128) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else if (n > 0) {
      s.w_[0] = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    return s;
  }

  static VertexSet from_low_word(std::uint64_t w) {
    VertexSet s;
    s.w_[0] = w;
    return s;
  }

  static VertexSet from_vertices(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.set(v);
    return s;
  }

  bool test(int v) const {
    assert(v >= 0 && v < kMaxVertices);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }

  VertexSet& set(int v) {
    assert(v >= 0 && v < kMaxVertices);
    w_[v >> 6] |= std::uint64_t{1} << (v & 63);
    return *this;
  }

  VertexSet& reset(int v) {
    assert(v >= 0 && v < kMaxVertices);
    w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    return *this;
  }

  int count() const {
    return std::popcount(w_[0]) + std::popcount(w_[1]);
  }

  bool empty() const { return w_[0] == 0 && w_[1] == 0; }

  std::uint64_t low_word() const { return w_[0]; }
  std::uint64_t word(int i) const { return w_[i]; }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r;
    r.w_[0] = w_[0] & o.w_[0];
    r.w_[1] = w_[1] & o.w_[1];
    return r;
  }

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r;
    r.w_[0] = w_[0] | o.w_[0];
    r.w_[1] = w_[1] | o.w_[1];
    return r;
  }

  VertexSet operator^(const VertexSet& o) const {
    VertexSet r;
    r.w_[0] = w_[0] ^ o.w_[0];
    r.w_[1] = w_[1] ^ o.w_[1];
    return r;
  }

  // Set difference: elements of *this not in o.
  VertexSet without(const VertexSet& o) const {
    VertexSet r;
    r.w_[0] = w_[0] & ~o.w_[0];
    r.w_[1] = w_[1] & ~o.w_[1];
    return r;
  }

  bool is_subset_of(const VertexSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  bool intersects(const VertexSet& o) const {
    return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
  }

  // Index of the lowest set bit, or -1 when empty.
  int lowest() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // True when some element is strictly greater than p.
  bool any_above(int p) const {
    if (p < 0) return !empty();
    if (p < 63) return (w_[0] >> (p + 1)) != 0 || w_[1] != 0;
    if (p == 63) return w_[1] != 0;
    if (p < 127) return (w_[1] >> (p - 63)) != 0;
    return false;
  }

  std::vector<int> vertices() const {
    std::vector<int> out;
    for (int i = 0; i < 2; ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        out.push_back(64 * i + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : vertices()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    s += "}";
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Lexicographic order on the sorted vertex sequences, so that e.g.
  // {} < {0} < {0,1} < {0,3} < {1} < {1,2}. Used to break ties between
  // optimal witnesses deterministically.
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    VertexSet d = a ^ b;
    if (d.empty()) return false;
    int p = d.lowest();
    if (a.test(p)) return b.any_above(p);
    return !a.any_above(p);
  }

 private:
  std::array<std::uint64_t, 2> w_{0, 0};
};

}  // namespace pnmax
