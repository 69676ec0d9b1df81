#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace grove {

// Fixed-universe set of vertex indices backed by a bitset. All algorithms in
// this library are set-intersection heavy, so membership, iteration and
// cardinality are the contract; members are always within [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe),
        words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

  static VertexSet all(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
  }

  void insert(int v) {
    std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (!(w & bit)) {
      w |= bit;
      ++count_;
    }
  }

  void erase(int v) {
    std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  // Visits members in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count_);
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  int first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return static_cast<int>(wi * 64 + std::countr_zero(words_[wi]));
    return -1;
  }

  int intersection_size(const VertexSet& o) const {
    int n = 0;
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      n += std::popcount(words_[wi] & o.words_[wi]);
    return n;
  }

  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet s(a.universe_);
    for (std::size_t wi = 0; wi < s.words_.size(); ++wi) {
      s.words_[wi] = a.words_[wi] & b.words_[wi];
      s.count_ += std::popcount(s.words_[wi]);
    }
    return s;
  }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet s(a.universe_);
    for (std::size_t wi = 0; wi < s.words_.size(); ++wi) {
      s.words_[wi] = a.words_[wi] | b.words_[wi];
      s.count_ += std::popcount(s.words_[wi]);
    }
    return s;
  }

  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet s(a.universe_);
    for (std::size_t wi = 0; wi < s.words_.size(); ++wi) {
      s.words_[wi] = a.words_[wi] & ~b.words_[wi];
      s.count_ += std::popcount(s.words_[wi]);
    }
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int universe_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace grove
