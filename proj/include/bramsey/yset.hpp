#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace bramsey {

/// Fixed-capacity set of Y-indices backed by 64-bit words.
///
/// Callers are responsible for keeping every element below the host's n; the
/// set itself only knows its word capacity. `prefix(n)` and `complement(n)`
/// are the only operations that take n into account.
template <int Words>
class BasicYSet {
 public:
  static constexpr int kWords = Words;
  static constexpr int kCapacity = Words * 64;

  constexpr BasicYSet() = default;

  /// [0, n)
  static constexpr BasicYSet prefix(int n) {
    BasicYSet out;
    for (int w = 0; w < Words && n > 0; ++w, n -= 64) {
      out.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    return out;
  }

  /// [lo, hi)
  static constexpr BasicYSet range(int lo, int hi) {
    return prefix(hi).minus(prefix(lo));
  }

  constexpr void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  constexpr bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  constexpr bool any() const { return !none(); }

  /// Lowest element, or -1 when empty.
  constexpr int lowest() const {
    for (int w = 0; w < Words; ++w)
      if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  /// Highest element, or -1 when empty.
  constexpr int highest() const {
    for (int w = Words - 1; w >= 0; --w)
      if (words_[w] != 0) return w * 64 + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  constexpr BasicYSet& operator|=(const BasicYSet& o) {
    for (int w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  constexpr BasicYSet& operator&=(const BasicYSet& o) {
    for (int w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  friend constexpr BasicYSet operator|(BasicYSet a, const BasicYSet& b) { return a |= b; }
  friend constexpr BasicYSet operator&(BasicYSet a, const BasicYSet& b) { return a &= b; }

  constexpr BasicYSet minus(const BasicYSet& o) const {
    BasicYSet out = *this;
    for (int w = 0; w < Words; ++w) out.words_[w] &= ~o.words_[w];
    return out;
  }

  /// [0, n) \ *this
  constexpr BasicYSet complement(int n) const { return prefix(n).minus(*this); }

  /// |*this ∪ o| without materialising the union.
  constexpr int union_count(const BasicYSet& o) const {
    int c = 0;
    for (int w = 0; w < Words; ++w) c += std::popcount(words_[w] | o.words_[w]);
    return c;
  }
  constexpr int intersection_count(const BasicYSet& o) const {
    int c = 0;
    for (int w = 0; w < Words; ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  /// The k smallest elements (all of them when k exceeds the size).
  constexpr BasicYSet first(int k) const {
    BasicYSet out;
    for_each([&](int i) {
      if (k <= 0) return false;
      out.set(i);
      --k;
      return true;
    });
    return out;
  }

  /// Calls f(i) in increasing order; f may return false to stop early.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < Words; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int i = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if constexpr (std::is_same_v<decltype(f(i)), bool>) {
          if (!f(i)) return;
        } else {
          f(i);
        }
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  /// Copy into a set with a different word count. Elements beyond the new
  /// capacity are dropped.
  template <int Other>
  constexpr BasicYSet<Other> resized() const {
    BasicYSet<Other> out;
    for (int w = 0; w < Words && w < Other; ++w) out.word(w) = words_[w];
    return out;
  }

  constexpr std::uint64_t& word(int w) { return words_[w]; }
  constexpr std::uint64_t word(int w) const { return words_[w]; }

  friend constexpr bool operator==(const BasicYSet&, const BasicYSet&) = default;

 private:
  std::array<std::uint64_t, Words> words_{};
};

inline constexpr int kYCapacity = 512;
using YSet = BasicYSet<kYCapacity / 64>;

}  // namespace bramsey
