#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace pflight {

/// SplitMix64 finalizer: a bijective 64-bit avalanche mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Combines two words into one stream key. Not symmetric in its arguments.
constexpr std::uint64_t combine64(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(a + 0x9e3779b97f4a7c15ULL * (mix64(b) + 1));
}

/// Identifies one independent random stream.
///
/// The generator state for (master_seed, stream_index) is obtained by
/// running SplitMix64 from the key mix64(master_seed) ^ mix64'(stream_index)
/// (see seed_key) and taking its first four outputs as the xoshiro256**
/// state words. Because mix64 is a bijection and the stream word passes
/// through a second, differently-offset bijection, distinct stream indices
/// under one master seed give distinct keys and therefore distinct states.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

constexpr std::uint64_t seed_key(SeedSpec seed) noexcept {
  return mix64(seed.master_seed) ^ mix64(seed.stream_index + 0x632be59bd9b4e019ULL);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  constexpr std::uint64_t operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0. Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(SeedSpec seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform on (0, 1], 53-bit resolution.
  double uniform_open_closed() noexcept;
  /// Uniform on (0, 1), 53-bit resolution.
  double uniform_open() noexcept;

  const std::array<std::uint64_t, 4>& state() const noexcept { return s_; }

 private:
  std::array<std::uint64_t, 4> s_;
};

}  // namespace pflight
