#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bracelab {

/// Subset of the elements {0, .., n-1} of one brace, as a dynamic bit set.
/// Masks from different braces must never be mixed; comparisons are on bits
/// only.
class SubsetMask {
 public:
  SubsetMask() : n_(0) {}
  explicit SubsetMask(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static SubsetMask empty(int n) { return SubsetMask(n); }

  static SubsetMask singleton(int n, int a) {
    SubsetMask m(n);
    m.set(a);
    return m;
  }

  static SubsetMask full(int n) {
    SubsetMask m(n);
    for (int i = 0; i < n; ++i) m.set(i);
    return m;
  }

  static SubsetMask of(int n, const std::vector<int>& elements) {
    SubsetMask m(n);
    for (int a : elements) m.set(a);
    return m;
  }

  int universe() const { return n_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(1ull << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  bool operator==(const SubsetMask& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const SubsetMask& o) const { return !(*this == o); }

  SubsetMask& operator|=(const SubsetMask& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  SubsetMask& operator&=(const SubsetMask& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }

  /// this \ o
  SubsetMask minus(const SubsetMask& o) const {
    SubsetMask r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  bool contains(const SubsetMask& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  /// Canonical order: by size, then by the bit pattern read as an integer
  /// (bit i has weight 2^i). Used wherever a "least" subset is reported.
  static bool size_value_less(const SubsetMask& a, const SubsetMask& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

  struct Hash {
    size_t operator()(const SubsetMask& m) const {
      uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(m.n_);
      for (uint64_t w : m.words_) {
        h ^= w;
        h *= 1099511628211ull;
      }
      return static_cast<size_t>(h);
    }
  };

 private:
  int n_;
  std::vector<uint64_t> words_;
};

}  // namespace bracelab
