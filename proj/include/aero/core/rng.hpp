// Copyright Contributors to the AeroSurrogate Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace aero {

/// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// FNV-1a hash of a byte string; stable across platforms.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Counter-based random stream. Draw i is a pure function of (key, i), so
/// identically keyed streams yield identical sequences regardless of
/// platform, thread schedule, or call site. All distribution transforms are
/// pinned here instead of relying on implementation-defined <random> ones.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static CounterRng keyed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
    std::uint64_t k = mix64(seed + kGolden);
    k = mix64(k ^ (stream + kGolden));
    k = mix64(k ^ (index + kGolden));
    return CounterRng(k);
  }

  std::uint64_t next_u64() { return mix64(key_ + kGolden * ++counter_); }

  /// in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// inclusive bounds; exact via rejection sampling
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next_u64());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
  }

  bool bernoulli(double p) { return next_double() < p; }

  double normal(double mean = 0.0, double stddev = 1.0) {
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace aero
