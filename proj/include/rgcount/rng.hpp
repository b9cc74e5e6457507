#ifndef RGCOUNT_RNG_HPP
#define RGCOUNT_RNG_HPP

#include <array>
#include <cstdint>

namespace rgc {

// splitmix64 finalizer; used for seeding and for deriving substreams.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// xoshiro256** seeded through splitmix64.
//
// Stream splitting: substream(seed, i) hashes (seed, i) into an independent
// state, so sample i can be drawn without generating samples 0..i-1 and
// samples can run concurrently. Sequences are reproducible for a fixed
// build; no cross-language bit compatibility is promised.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t z = seed;
    for (auto& w : state_) {
      z = mix64(z);
      w = z;
    }
    state_[0] |= 1;  // never all-zero
  }

  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix64(seed) ^ mix64(mix64(stream) + 0x632be59bd9b4e019ull));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, bound), bound >= 1. Unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t cutoff = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= cutoff) return r % bound;
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

}  // namespace rgc

#endif
