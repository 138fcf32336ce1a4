// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tdsnn {

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic per-purpose seed derived from a master seed, a stream name
/// and an optional index. All randomness in the library flows through named
/// substreams ("weights", "variation", "input", "folds", ...) so one part of
/// an experiment can be held fixed while another is re-drawn.
std::uint64_t substream_seed(std::uint64_t master, std::string_view stream,
                             std::uint64_t index = 0);

/// mt19937_64 with explicit uniform/gaussian helpers. std::*_distribution is
/// implementation-defined, so the distributions are spelled out here to keep
/// seeded experiments reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; second value cached.
  double gaussian();

  /// Unbiased integer in [0, bound).
  std::uint32_t below(std::uint32_t bound);

  /// Fair bit.
  int bit() { return static_cast<int>(eng_() >> 63); }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tdsnn
