// SPDX-License-Identifier: Apache-2.0
#include "rng.hpp"

#include <cmath>

namespace tdsnn {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t master, std::string_view stream,
                             std::uint64_t index) {
  return splitmix64(master ^ fnv1a64(stream) ^ splitmix64(index));
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller on open-interval uniforms.
  double u1;
  do {
    u1 = uniform01();
  } while (u1 <= 0.0);
  double u2 = uniform01();
  double mag = std::sqrt(-2.0 * std::log(u1));
  double ang = 2.0 * M_PI * u2;
  spare_ = mag * std::sin(ang);
  have_spare_ = true;
  return mag * std::cos(ang);
}

std::uint32_t Rng::below(std::uint32_t bound) {
  // Rejection sampling on the top 32 bits.
  std::uint64_t limit = (0x100000000ull / bound) * bound;
  for (;;) {
    std::uint64_t x = eng_() >> 32;
    if (x < limit) return static_cast<std::uint32_t>(x % bound);
  }
}

}  // namespace tdsnn
