#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace hetpanel::rng {

// SplitMix64 finalizer (Stafford mix 13). Bijective on uint64.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Folds a path of ids into a seed. Streams keyed on distinct paths are
// disjoint, so adding units/replications/draws never perturbs other streams.
constexpr std::uint64_t derive_key(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t k = mix64(seed + kGolden);
  for (std::uint64_t id : path) k = mix64(k ^ mix64(id + kGolden));
  return k;
}

// Counter-based stream: the n-th output is a pure function of (key, n).
// This is SplitMix64 with random access, which is what makes parallel
// evaluation order irrelevant to the results.
class Stream {
 public:
  explicit Stream(std::uint64_t key) noexcept : key_(key) {}

  std::uint64_t next_u64() noexcept { return mix64(key_ + (++counter_) * kGolden); }

  /// Uniform on (0, 1]; never 0, so it is safe under log().
  double next_unit() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; consumes exactly two uniforms per pair.
  double next_gaussian() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u = next_unit();
    const double v = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * std::numbers::pi * v;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Uniform integer in [0, n). Multiply-shift map; bias is below n / 2^64.
  std::uint64_t uniform_below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stream id tags used to keep the top-level stream layout stable.
enum : std::uint64_t {
  kStreamUnitParams = 1,
  kStreamPanel = 2,
  kStreamBootstrap = 3,
  kStreamOracle = 4,
};

}  // namespace hetpanel::rng
