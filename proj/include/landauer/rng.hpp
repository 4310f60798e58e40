#pragma once

#include <cstdint>

namespace landauer {

// Counter-based generator: every draw is a pure function of
// (seed, counter, lane), so parallel streams need no shared state and any
// cycle can be regenerated in isolation. The mixer is the SplitMix64
// finalizer applied to a Weyl-sequence position; see Steele, Lea & Flood,
// "Fast splittable pseudorandom number generators" (OOPSLA 2014).
class CounterRng {
public:
  explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  constexpr std::uint64_t bits(std::uint64_t counter,
                               std::uint32_t lane) const noexcept {
    std::uint64_t x = mix(seed_ ^ 0x6a09e667f3bcc909ULL);
    x += (counter * 4 + lane + 1) * kGolden;
    x = mix(x);
    // Second round decorrelates neighbouring counters under weak seeds.
    return mix(x + kGolden);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter,
                           std::uint32_t lane) const noexcept {
    return static_cast<double>(bits(counter, lane) >> 11) * 0x1.0p-53;
  }

  constexpr std::uint64_t seed() const noexcept { return seed_; }

private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
};

}  // namespace landauer
