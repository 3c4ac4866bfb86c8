// tests/helpers.hpp

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Deterministic synthetic signals and independent brute-force oracles
// shared by the test suites. Everything here is intentionally the dumbest
// possible implementation of its definition.

#ifndef SIGFEAT_TESTS_HELPERS_HPP
#define SIGFEAT_TESTS_HELPERS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "sigfeat/metrics.hpp"
#include "sigfeat/types.hpp"

namespace sigfeat::testing {

inline constexpr double kTestPi = std::numbers::pi;

inline Waveform tone(double freq_hz, double seconds, double amp = 0.5,
                     int fs = 16000, double phase = 0.0) {
  Waveform w;
  w.sample_rate_hz = fs;
  const std::size_t n = static_cast<std::size_t>(seconds * fs);
  w.samples.resize(n);
  for (std::size_t t = 0; t < n; ++t)
    w.samples[t] = amp * std::cos(2.0 * kTestPi * freq_hz * t / fs + phase);
  return w;
}

inline Waveform harmonic_tone(double f0_hz, int n_harmonics, double seconds,
                              double amp = 0.4, int fs = 16000) {
  Waveform w;
  w.sample_rate_hz = fs;
  const std::size_t n = static_cast<std::size_t>(seconds * fs);
  w.samples.assign(n, 0.0);
  for (int h = 1; h <= n_harmonics; ++h)
    for (std::size_t t = 0; t < n; ++t)
      w.samples[t] += (amp / h) * std::sin(2.0 * kTestPi * h * f0_hz * t / fs);
  return w;
}

inline Waveform white_noise(double seconds, unsigned seed, double amp = 0.3,
                            int fs = 16000) {
  Waveform w;
  w.sample_rate_hz = fs;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-amp, amp);
  const std::size_t n = static_cast<std::size_t>(seconds * fs);
  w.samples.resize(n);
  for (double& s : w.samples) s = dist(rng);
  return w;
}

inline Waveform silence(double seconds, int fs = 16000) {
  Waveform w;
  w.sample_rate_hz = fs;
  w.samples.assign(static_cast<std::size_t>(seconds * fs), 0.0);
  return w;
}

inline Waveform impulse(double seconds, std::size_t at, int fs = 16000) {
  Waveform w = silence(seconds, fs);
  if (at < w.samples.size()) w.samples[at] = 1.0;
  return w;
}

inline Waveform square_wave(double freq_hz, double seconds, int fs = 16000) {
  Waveform w;
  w.sample_rate_hz = fs;
  const std::size_t n = static_cast<std::size_t>(seconds * fs);
  w.samples.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double ph = std::fmod(freq_hz * t / fs, 1.0);
    w.samples[t] = ph < 0.5 ? 1.0 : -1.0;
  }
  return w;
}

/// x[n] = -a1 x[n-1] - a2 x[n-2] + e[n], the AR process of
/// A(z) = 1 + a1 z^-1 + a2 z^-2 driven by unit white noise.
inline Waveform ar2_signal(double a1, double a2, double seconds, unsigned seed,
                           int fs = 16000) {
  Waveform w;
  w.sample_rate_hz = fs;
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  const std::size_t n = static_cast<std::size_t>(seconds * fs);
  w.samples.resize(n);
  double y1 = 0.0, y2 = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double y = -a1 * y1 - a2 * y2 + dist(rng);
    w.samples[t] = y;
    y2 = y1;
    y1 = y;
  }
  return w;
}

/// O(n^2) textbook DFT.
inline std::vector<std::complex<double>> brute_dft(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < n; ++t)
      acc += x[t] * std::polar(1.0, -2.0 * kTestPi * static_cast<double>(k) * t / n);
    out[k] = acc;
  }
  return out;
}

/// Direct-summation orthonormal DCT-II.
inline std::vector<double> brute_dct2(const std::vector<double>& x, std::size_t n_out) {
  const std::size_t n = x.size();
  std::vector<double> out(n_out, 0.0);
  for (std::size_t k = 0; k < n_out; ++k) {
    double acc = 0.0;
    for (std::size_t t = 0; t < n; ++t)
      acc += x[t] * std::cos(kTestPi * (2.0 * t + 1.0) * k / (2.0 * n));
    out[k] = acc * (k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n));
  }
  return out;
}

struct SweepOracle {
  double eer = 0.0;
  double min_dcf = 0.0;
  std::vector<DetPoint> det;
};

/// Exhaustive threshold sweep: every candidate threshold is evaluated by
/// counting over all trials (no sorting, no incremental updates).
inline SweepOracle sweep_oracle(const TrialScores& trials, const DcfParams& params) {
  std::vector<double> scores;
  std::size_t n_target = 0, n_nontarget = 0;
  for (const Trial& t : trials.trials) {
    scores.push_back(t.score);
    (t.is_target ? n_target : n_nontarget) += 1;
  }
  // distinct scores, selection-sorted to stay independent of std::sort
  std::vector<double> distinct;
  for (double s : scores) {
    bool seen = false;
    for (double d : distinct) seen = seen || d == s;
    if (!seen) distinct.push_back(s);
  }
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j)
      if (distinct[j] < distinct[i]) std::swap(distinct[i], distinct[j]);

  std::vector<double> thresholds;
  thresholds.push_back(distinct.front() - 1.0);
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i)
    thresholds.push_back(0.5 * (distinct[i] + distinct[i + 1]));
  thresholds.push_back(distinct.back() + 1.0);

  SweepOracle oracle;
  for (double th : thresholds) {
    std::size_t miss = 0, fa = 0;
    for (const Trial& t : trials.trials) {
      if (t.is_target && t.score < th) ++miss;      // accept iff score >= threshold
      if (!t.is_target && t.score >= th) ++fa;
    }
    DetPoint p;
    p.threshold = th;
    p.p_miss = static_cast<double>(miss) / static_cast<double>(n_target);
    p.p_fa = static_cast<double>(fa) / static_cast<double>(n_nontarget);
    oracle.det.push_back(p);
  }

  // crossing of the two error rates, linearly interpolated
  oracle.eer = oracle.det.back().p_fa;
  for (std::size_t i = 0; i < oracle.det.size(); ++i) {
    const double d = oracle.det[i].p_fa - oracle.det[i].p_miss;
    if (d > 0.0) continue;
    if (d == 0.0) {
      oracle.eer = oracle.det[i].p_fa;
    } else {
      const DetPoint& a = oracle.det[i - 1];
      const DetPoint& b = oracle.det[i];
      const double da = a.p_fa - a.p_miss;
      const double frac = da / (da - d);
      oracle.eer = a.p_fa + frac * (b.p_fa - a.p_fa);
    }
    break;
  }

  const double w_miss = params.c_miss * params.p_target;
  const double w_fa = params.c_fa * (1.0 - params.p_target);
  double best = 1e300;
  for (const DetPoint& p : oracle.det) {
    const double dcf = (w_miss * p.p_miss + w_fa * p.p_fa) / std::min(w_miss, w_fa);
    if (dcf < best) best = dcf;
  }
  oracle.min_dcf = best;
  return oracle;
}

/// Random trial set with n <= 50; every other set is quantized to one
/// decimal so score ties occur.
inline TrialScores random_trials(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> count(1, 25);
  std::uniform_real_distribution<double> score(-5.0, 5.0);
  const bool quantize = (seed % 2) == 0;
  TrialScores t;
  const int n_t = count(rng), n_n = count(rng);
  for (int i = 0; i < n_t + n_n; ++i) {
    double s = score(rng);
    if (quantize) s = std::round(s * 10.0) / 10.0;
    t.trials.push_back({"t" + std::to_string(i), i < n_t, s});
  }
  return t;
}

inline bool all_finite(const Matrix& m) {
  for (double v : m.data())
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace sigfeat::testing

#endif  // SIGFEAT_TESTS_HELPERS_HPP
