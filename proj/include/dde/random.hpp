#pragma once

#include <cstdint>
#include <random>

namespace dde {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Value-typed, splittable random stream.
///
/// A stream is identified by a 64-bit key. `split(i)` derives an independent
/// child whose key is a pure function of (key, i), so the stream used by
/// bootstrap replicate r of a test seeded with s is always
/// `RandomStream(s).split(r)`, whatever thread runs it. Draws come from a
/// 64-bit Mersenne Twister seeded from the key; variates are produced by the
/// transforms in families.cpp rather than <random> distributions, whose
/// output is implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : key_(mix64(seed)), engine_(seed_engine(key_)) {}

  std::uint64_t key() const noexcept { return key_; }

  RandomStream split(std::uint64_t index) const {
    return RandomStream(Key{mix64(key_ ^ mix64(index + 0x632be59bd9b4e019ULL))});
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  struct Key {
    std::uint64_t value;
  };
  explicit RandomStream(Key k) : key_(k.value), engine_(seed_engine(key_)) {}

  static std::mt19937_64 seed_engine(std::uint64_t key) {
    std::seed_seq seq{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32),
                      static_cast<std::uint32_t>(mix64(key)),
                      static_cast<std::uint32_t>(mix64(key) >> 32)};
    return std::mt19937_64(seq);
  }

  std::uint64_t key_;
  std::mt19937_64 engine_;
};

}  // namespace dde
