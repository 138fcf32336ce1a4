// SPDX-License-Identifier: Apache-2.0
#include "curves.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace tdsnn {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

[[noreturn]] void invalid(const std::string& what) {
  throw std::invalid_argument("curves: " + what);
}

}  // namespace

BehavioralCurves BehavioralCurves::make_default(const CurveParams& p) {
  if (!(p.f_max_hz > 0.0) || p.f_max_hz >= kClockHz)
    invalid("f_max_hz must lie in (0, 100 MHz): one VCO edge per step");
  if (!(p.fire_gain_per_v > 0.0)) invalid("fire_gain_per_v must be > 0");
  if (!(p.leak_tau_s > 0.0)) invalid("leak_tau_s must be > 0");
  if (!(p.integ_step_v > 0.0)) invalid("integ_step_v must be > 0");
  if (!(p.micro_dt_s > 0.0)) invalid("micro_dt_s must be > 0");

  BehavioralCurves c;
  const double leak_gain = p.micro_dt_s / p.leak_tau_s;
  for (int i = 0; i < kCurvePoints; ++i) {
    const double v = static_cast<double>(i) / (kCurvePoints - 1);
    // (127.5 - i) keeps the two middle points exactly opposite, so the
    // interpolated leakage is exactly zero at the 0.5 V rest voltage.
    c.leak_[i] = leak_gain * ((127.5 - i) / (kCurvePoints - 1));
    c.fire_pos_[i] = p.f_max_hz * sigmoid(p.fire_gain_per_v * (v - 0.6));
    c.fire_neg_[i] = p.f_max_hz * sigmoid(-p.fire_gain_per_v * (v - 0.4));
    const double shape = 4.0 * v * (1.0 - v);  // vanishes at both rails
    for (int w = 0; w < kWeightLevels; ++w) {
      const double mag = p.integ_step_v * (1.0 + w) / kWeightLevels * shape;
      c.integ_exc_[w][i] = mag;
      c.integ_inh_[w][i] = -mag;
    }
  }
  c.validate();
  return c;
}

double BehavioralCurves::integrate(int word, bool excitatory, double v) const {
  return interp_table(integ_table(word, excitatory).data(), v);
}

const CurveTable& BehavioralCurves::integ_table(int word,
                                                bool excitatory) const {
  if (word < 0 || word >= kWeightLevels)
    throw std::out_of_range("curves: weight word out of [0,15]");
  return excitatory ? integ_exc_[word] : integ_inh_[word];
}

void BehavioralCurves::validate() const {
  // Leakage: zero at 0.5 V, pulls up below and down above.
  if (std::abs(leak(0.5)) > 1e-9) invalid("leak(0.5 V) must be 0");
  for (int i = 0; i < kCurvePoints; ++i) {
    if (i <= 127 && !(leak_[i] > 0.0)) invalid("leak must be > 0 below 0.5 V");
    if (i >= 128 && !(leak_[i] < 0.0)) invalid("leak must be < 0 above 0.5 V");
  }
  for (int i = 0; i < kCurvePoints; ++i) {
    if (fire_pos_[i] < 0.0 || fire_neg_[i] < 0.0)
      invalid("VCO frequencies must be non-negative");
    if (fire_pos_[i] >= kClockHz || fire_neg_[i] >= kClockHz)
      invalid("VCO frequency must stay below the 100 MHz clock");
    if (!(fire_pos_[i] + fire_neg_[i] > 0.0))
      invalid("fire_pos + fire_neg must be positive everywhere");
    if (i > 0 && fire_pos_[i] < fire_pos_[i - 1])
      invalid("fire_pos must be monotone non-decreasing");
    if (i > 0 && fire_neg_[i] > fire_neg_[i - 1])
      invalid("fire_neg must be monotone non-increasing");
  }
  for (int w = 0; w < kWeightLevels; ++w) {
    for (int i = 0; i < kCurvePoints; ++i) {
      if (integ_exc_[w][i] < 0.0) invalid("excitatory tables must be >= 0");
      if (integ_inh_[w][i] > 0.0) invalid("inhibitory tables must be <= 0");
      if (w > 0 && std::abs(integ_exc_[w][i]) < std::abs(integ_exc_[w - 1][i]))
        invalid("|excitatory delta| must be non-decreasing in the word");
      if (w > 0 && std::abs(integ_inh_[w][i]) < std::abs(integ_inh_[w - 1][i]))
        invalid("|inhibitory delta| must be non-decreasing in the word");
    }
  }
}

void BehavioralCurves::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open curve file for writing: " + path);
  out << "vco-curves v1\n";
  out << std::setprecision(17);
  for (int i = 0; i < kCurvePoints; ++i) {
    const double v = static_cast<double>(i) / (kCurvePoints - 1);
    out << v << ' ' << leak_[i] << ' ' << fire_pos_[i] << ' ' << fire_neg_[i]
        << '\n';
  }
  for (int w = 0; w < kWeightLevels; ++w)
    for (int i = 0; i < kCurvePoints; ++i)
      out << static_cast<double>(i) / (kCurvePoints - 1) << ' '
          << integ_exc_[w][i] << '\n';
  for (int w = 0; w < kWeightLevels; ++w)
    for (int i = 0; i < kCurvePoints; ++i)
      out << static_cast<double>(i) / (kCurvePoints - 1) << ' '
          << integ_inh_[w][i] << '\n';
  if (!out) throw IoError("short write to curve file: " + path);
}

BehavioralCurves BehavioralCurves::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open curve file: " + path);
  std::string header;
  std::getline(in, header);
  if (header != "vco-curves v1")
    throw IoError("bad curve file header in " + path + ": '" + header + "'");

  BehavioralCurves c;
  auto read_v = [&](int i) {
    double v;
    if (!(in >> v)) throw IoError("truncated curve file: " + path);
    const double expect = static_cast<double>(i) / (kCurvePoints - 1);
    if (std::abs(v - expect) > 1e-9)
      throw IoError("curve file voltage grid must be uniform over [0,1] V");
  };
  for (int i = 0; i < kCurvePoints; ++i) {
    read_v(i);
    if (!(in >> c.leak_[i] >> c.fire_pos_[i] >> c.fire_neg_[i]))
      throw IoError("truncated curve file: " + path);
  }
  for (int w = 0; w < kWeightLevels; ++w)
    for (int i = 0; i < kCurvePoints; ++i) {
      read_v(i);
      if (!(in >> c.integ_exc_[w][i]))
        throw IoError("truncated curve file: " + path);
    }
  for (int w = 0; w < kWeightLevels; ++w)
    for (int i = 0; i < kCurvePoints; ++i) {
      read_v(i);
      if (!(in >> c.integ_inh_[w][i]))
        throw IoError("truncated curve file: " + path);
    }
  c.validate();
  return c;
}

VariationFactors draw_variation(Rng& rng, double std_dev) {
  if (std_dev < 0.0)
    throw std::invalid_argument("variation std must be >= 0");
  auto draw = [&] {
    double f;
    do {
      f = 1.0 + std_dev * rng.gaussian();
    } while (f <= 0.05);
    return f;
  };
  VariationFactors v;
  v.leak_scale = draw();
  v.integ_scale = draw();
  v.fire_scale = draw();
  return v;
}

void NeuronState::set_phases(double pos_cycles, double neg_cycles) {
  phase_pos = static_cast<std::uint32_t>(pos_cycles * 0x1.0p32);
  phase_neg = static_cast<std::uint32_t>(neg_cycles * 0x1.0p32);
}

std::uint32_t phase_increment(double freq_hz, double dt_s) {
  double cycles = freq_hz * dt_s;
  if (cycles <= 0.0) return 0;
  long long inc = std::llround(cycles * 0x1.0p32);
  const long long max_inc = 0xffffffffll;
  return static_cast<std::uint32_t>(inc > max_inc ? max_inc : inc);
}

double integrate_delta(double v, int word, bool excitatory,
                       const BehavioralCurves& curves,
                       const VariationFactors& factors) {
  return factors.integ_scale * curves.integrate(word, excitatory, v);
}

std::pair<double, double> fire_frequencies(double v,
                                           const BehavioralCurves& curves,
                                           const VariationFactors& factors) {
  double fp = factors.fire_scale * curves.fire_pos(v);
  double fn = factors.fire_scale * curves.fire_neg(v);
  if (fp > kVcoClampHz) fp = kVcoClampHz;
  if (fn > kVcoClampHz) fn = kVcoClampHz;
  return {fp, fn};
}

EdgeCounts advance_phase(NeuronState& state, double f_pos, double f_neg,
                         double dt_s) {
  EdgeCounts edges;
  const std::uint32_t inc_p = phase_increment(f_pos, dt_s);
  const std::uint32_t inc_n = phase_increment(f_neg, dt_s);
  const std::uint32_t old_p = state.phase_pos;
  const std::uint32_t old_n = state.phase_neg;
  state.phase_pos = old_p + inc_p;  // mod 2^32; carry-out is the rising edge
  state.phase_neg = old_n + inc_n;
  edges.pos = state.phase_pos < old_p;
  edges.neg = state.phase_neg < old_n;
  return edges;
}

}  // namespace tdsnn
