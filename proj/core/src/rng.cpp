#include "pflight/rng.hpp"

namespace pflight {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

}  // namespace

Xoshiro256::Xoshiro256(SeedSpec seed) noexcept {
  SplitMix64 sm(seed_key(seed));
  for (auto& w : s_) w = sm();
  // All-zero state is the one fixed point of xoshiro.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

Xoshiro256::result_type Xoshiro256::operator()() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform_open_closed() noexcept {
  return static_cast<double>(((*this)() >> 11) + 1) * kTwoPow53Inv;
}

double Xoshiro256::uniform_open() noexcept {
  return (static_cast<double>((*this)() >> 11) + 0.5) * kTwoPow53Inv;
}

}  // namespace pflight
