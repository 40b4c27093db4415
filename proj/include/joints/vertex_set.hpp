#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace joints {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline std::size_t words_for(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }

/// Fixed-universe bitset over vertex indices 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  template <class Range>
  static VertexSet of(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool contains(int v) const { return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1u; }
  void insert(int v) { words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(int v) { words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1.
  int first() const { return next(-1); }
  /// Smallest member strictly greater than v, or -1.
  int next(int v) const {
    std::size_t start = static_cast<std::size_t>(v + 1);
    if (start >= universe_) return -1;
    std::size_t wi = start / kWordBits;
    Word w = words_[wi] & (~Word{0} << (start % kWordBits));
    while (true) {
      if (w) return static_cast<int>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(static_cast<int>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

 private:
  void trim() {
    if (universe_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

namespace bits {

inline std::size_t popcount(std::span<const Word> a) {
  std::size_t c = 0;
  for (Word w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t and_count(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline void and_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

}  // namespace bits

}  // namespace joints
