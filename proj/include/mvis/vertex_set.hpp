#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mvis {

/// Largest vertex count representable by a VertexSet row.
inline constexpr int kMaxVertices = 512;

/**
 * Fixed-width bit vector over the vertex range [0, n) of one graph.
 *
 * Used both as an adjacency row and as the candidate set X. The universe
 * size n travels with the set so complements stay inside the graph.
 */
class VertexSet
{
public:
  static constexpr int kWords = kMaxVertices / 64;

  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe) { assert(universe >= 0 && universe <= kMaxVertices); }
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe)
  {
    for (int v : members)
      set(v);
  }

  static auto full(int universe) -> VertexSet
  {
    VertexSet s(universe);
    for (int w = 0; w < universe / 64; ++w)
      s.words_[w] = ~std::uint64_t{0};
    if (universe % 64)
      s.words_[universe / 64] = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
  }

  static auto from_indices(int universe, const std::vector<int> &members) -> VertexSet
  {
    VertexSet s(universe);
    for (int v : members)
      s.set(v);
    return s;
  }

  auto universe() const -> int { return n_; }

  auto test(int v) const -> bool { return (words_[v >> 6] >> (v & 63)) & 1U; }
  auto set(int v) -> void
  {
    assert(v >= 0 && v < n_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  auto reset(int v) -> void { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  auto count() const -> int
  {
    int c = 0;
    for (auto w : words_)
      c += std::popcount(w);
    return c;
  }
  auto any() const -> bool
  {
    for (auto w : words_)
      if (w)
        return true;
    return false;
  }
  auto none() const -> bool { return !any(); }

  /// Smallest member, or -1.
  auto first() const -> int { return next(0); }

  /// Smallest member >= from, or -1.
  auto next(int from) const -> int
  {
    if (from >= n_)
      return -1;
    int w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word)
        return (w << 6) + std::countr_zero(word);
      if (++w == kWords)
        return -1;
      word = words_[w];
    }
  }

  /// Largest member, or -1.
  auto last() const -> int
  {
    for (int w = kWords - 1; w >= 0; --w)
      if (words_[w])
        return (w << 6) + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  template <class F>
  auto for_each(F &&f) const -> void
  {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f((w << 6) + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  auto members() const -> std::vector<int>
  {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  auto complement() const -> VertexSet { return full(n_).minus(*this); }

  auto minus(const VertexSet &other) const -> VertexSet
  {
    VertexSet r = *this;
    for (int w = 0; w < kWords; ++w)
      r.words_[w] &= ~other.words_[w];
    return r;
  }

  auto intersects(const VertexSet &other) const -> bool
  {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & other.words_[w])
        return true;
    return false;
  }

  /// (this & a) & ~b is non-empty.
  auto intersects_outside(const VertexSet &a, const VertexSet &b) const -> bool
  {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & a.words_[w] & ~b.words_[w])
        return true;
    return false;
  }

  auto is_subset_of(const VertexSet &other) const -> bool
  {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w])
        return false;
    return true;
  }

  auto intersection_count(const VertexSet &other) const -> int
  {
    int c = 0;
    for (int w = 0; w < kWords; ++w)
      c += std::popcount(words_[w] & other.words_[w]);
    return c;
  }

  auto operator&=(const VertexSet &o) -> VertexSet &
  {
    for (int w = 0; w < kWords; ++w)
      words_[w] &= o.words_[w];
    return *this;
  }
  auto operator|=(const VertexSet &o) -> VertexSet &
  {
    for (int w = 0; w < kWords; ++w)
      words_[w] |= o.words_[w];
    return *this;
  }
  friend auto operator&(VertexSet a, const VertexSet &b) -> VertexSet { return a &= b; }
  friend auto operator|(VertexSet a, const VertexSet &b) -> VertexSet { return a |= b; }

  friend auto operator==(const VertexSet &a, const VertexSet &b) -> bool
  {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  /// Colexicographic order: compares by the largest element of the symmetric difference.
  friend auto colex_less(const VertexSet &a, const VertexSet &b) -> bool
  {
    for (int w = kWords - 1; w >= 0; --w) {
      std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff) {
        int top = 63 - std::countl_zero(diff);
        return (b.words_[w] >> top) & 1U;
      }
    }
    return false;
  }

private:
  int n_ = 0;
  std::array<std::uint64_t, kWords> words_{};
};

} // namespace mvis
