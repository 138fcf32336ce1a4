// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace tdsnn {

/// Counter bank for one VCO output: counts 100 MHz clock edges between
/// consecutive VCO rising edges. c_ext holds the last latched value (stale
/// between edges), c_int is the running count and resets on each latch.
struct CounterState {
  std::uint32_t c_int = 0;
  std::uint32_t c_ext = 0;
};

/// One simulation micro-step = one clock rising edge. Must be called exactly
/// once per step; vco_edge is 0 or 1.
inline void counter_step(CounterState& s, int vco_edge) {
  ++s.c_int;
  if (vco_edge) {
    s.c_ext = s.c_int;
    s.c_int = 0;
  }
}

inline std::uint32_t observe(const CounterState& s) { return s.c_ext; }

/// A running count past this bound means the VCO has effectively stalled;
/// the reservoir raises a diagnostic when it happens.
inline constexpr std::uint32_t kCounterStallBound = 1u << 16;

}  // namespace tdsnn
