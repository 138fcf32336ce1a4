// SPDX-License-Identifier: Apache-2.0
//
// Behavioral model of one time-domain spiking neuron, split into three
// characteristics sampled as 256-point lookup tables over the internal
// control voltage v_cap in [0, 1] V:
//
//   Leakage:     v_cap drift per 10 ns step, zero at the 0.5 V rest point.
//   Integration: v_cap change per received pulse, one table per 4-bit
//                weight word and polarity.
//   Fire:        output frequencies of the two VCOs. The positive VCO speeds
//                up with v_cap, the negative one slows down, so at least one
//                counter refreshes quickly anywhere in the range.
//
// Default tables are generated analytically; measured silicon tables can be
// loaded from a `vco-curves v1` text file instead.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "rng.hpp"

namespace tdsnn {

inline constexpr int kCurvePoints = 256;
inline constexpr int kWeightLevels = 16;

/// System clock: one rising edge per simulation micro-step.
inline constexpr double kClockHz = 100e6;
inline constexpr double kDefaultMicroDt = 10e-9;

/// VCO frequencies are clamped strictly below the clock so a VCO can produce
/// at most one rising edge per micro-step.
inline constexpr double kVcoClampHz = 99.99e6;

struct CurveParams {
  double f_max_hz = 40e6;        // peak VCO frequency
  double fire_gain_per_v = 12.0; // steepness of the VCO tuning sigmoids
  double leak_tau_s = 100e-6;    // leakage time constant toward 0.5 V
  double integ_step_v = 8e-3;    // full-scale per-pulse voltage step
  double micro_dt_s = kDefaultMicroDt;
};

using CurveTable = std::array<double, kCurvePoints>;

inline double clamp01(double v) {
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

/// Linear interpolation over a 256-point table spanning [0, 1] V.
inline double interp_table(const double* tab, double v) {
  double x = clamp01(v) * (kCurvePoints - 1);
  int i = static_cast<int>(x);
  if (i > kCurvePoints - 2) i = kCurvePoints - 2;
  double f = x - i;
  return tab[i] + f * (tab[i + 1] - tab[i]);
}

class BehavioralCurves {
 public:
  /// Analytic default tables; throws std::invalid_argument when the
  /// parameters would violate a table invariant (bounds, monotonicity).
  static BehavioralCurves make_default(const CurveParams& params);

  /// Plain-text `vco-curves v1` table file.
  static BehavioralCurves load(const std::string& path);
  void save(const std::string& path) const;

  double leak(double v) const { return interp_table(leak_.data(), v); }
  double integrate(int word, bool excitatory, double v) const;
  double fire_pos(double v) const { return interp_table(fire_pos_.data(), v); }
  double fire_neg(double v) const { return interp_table(fire_neg_.data(), v); }

  const CurveTable& leak_table() const { return leak_; }
  const CurveTable& fire_pos_table() const { return fire_pos_; }
  const CurveTable& fire_neg_table() const { return fire_neg_; }
  const CurveTable& integ_table(int word, bool excitatory) const;

  /// Checks every table invariant; throws std::invalid_argument on failure.
  void validate() const;

 private:
  CurveTable leak_{};
  CurveTable fire_pos_{};
  CurveTable fire_neg_{};
  std::array<CurveTable, kWeightLevels> integ_exc_{};
  std::array<CurveTable, kWeightLevels> integ_inh_{};
};

/// Per-neuron multiplicative mismatch factors for the three curve families.
struct VariationFactors {
  double leak_scale = 1.0;
  double integ_scale = 1.0;
  double fire_scale = 1.0;
};

/// Normal(1, std) per factor, redrawn while <= 0.05. Draw order: leak,
/// integration, fire.
VariationFactors draw_variation(Rng& rng, double std_dev);

/// Control voltage plus fixed-point VCO phase accumulators. Phases are
/// fractional cycle positions in units of 2^-32 cycles; a wrap of the 32-bit
/// accumulator is exactly one rising edge.
struct NeuronState {
  double v_cap = 0.5;
  std::uint32_t phase_pos = 0;
  std::uint32_t phase_neg = 0;

  double phase_pos_cycles() const { return phase_pos * 0x1.0p-32; }
  double phase_neg_cycles() const { return phase_neg * 0x1.0p-32; }
  void set_phases(double pos_cycles, double neg_cycles);
};

/// Phase step per micro-step for a given frequency, in 2^-32 cycle units.
/// Requires f * dt < 1 (enforced by the frequency clamp).
std::uint32_t phase_increment(double freq_hz, double dt_s);

struct EdgeCounts {
  int pos = 0;
  int neg = 0;
};

/// Leakage drift for one micro-step; the caller clamps v + delta to [0,1] V.
inline double leak_delta(double v, const BehavioralCurves& curves,
                         const VariationFactors& factors) {
  return factors.leak_scale * curves.leak(v);
}

/// Voltage change for one received pulse through the given weight word.
double integrate_delta(double v, int word, bool excitatory,
                       const BehavioralCurves& curves,
                       const VariationFactors& factors);

/// Scaled VCO output frequencies at the given control voltage, clamped
/// below the one-edge-per-step bound.
std::pair<double, double> fire_frequencies(double v,
                                           const BehavioralCurves& curves,
                                           const VariationFactors& factors);

/// Advances both phase accumulators by one step of length dt at the given
/// frequencies and reports rising edges (0 or 1 per VCO).
EdgeCounts advance_phase(NeuronState& state, double f_pos, double f_neg,
                         double dt_s);

}  // namespace tdsnn
