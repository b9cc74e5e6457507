#ifndef RGCOUNT_BITSET_HPP
#define RGCOUNT_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rgc {

// Fixed-width bit vector over [0, n). Intersections are word-parallel; this
// is the hot primitive behind common-neighbor queries.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static Bitset full(std::size_t n) {
    Bitset b(n);
    for (auto& w : b.words_) w = ~0ull;
    b.trim();
    return b;
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (words_[i >> 6] >> (i & 63)) & 1ull;
  }

  void set(std::size_t i) {
    assert(i < n_);
    words_[i >> 6] |= 1ull << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < n_);
    words_[i >> 6] &= ~(1ull << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  // this <- this \ o
  Bitset& subtract(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  // Index of the r-th set bit, 0-based. r < count().
  std::size_t select(std::size_t r) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      const auto pc = static_cast<std::size_t>(std::popcount(words_[wi]));
      if (r >= pc) {
        r -= pc;
        continue;
      }
      std::uint64_t w = words_[wi];
      for (;;) {
        const int b = std::countr_zero(w);
        if (r == 0) return wi * 64 + static_cast<std::size_t>(b);
        w &= w - 1;
        --r;
      }
    }
    assert(false && "select out of range");
    return n_;
  }

  // Smallest member; size() when empty.
  std::size_t first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return n_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(static_cast<std::uint32_t>(v)); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (1ull << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rgc

#endif
