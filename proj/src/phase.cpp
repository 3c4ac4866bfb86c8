// src/phase.cpp

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

#include "sigfeat/phase.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace sigfeat {

namespace {

constexpr double kPi = std::numbers::pi;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// DFT of a real sequence zero-padded to n_fft, bins 0..n_fft/2.
std::vector<std::complex<double>> half_spectrum(std::span<const double> x, int n_fft) {
  std::vector<std::complex<double>> buf(n_fft, {0.0, 0.0});
  for (std::size_t t = 0; t < x.size(); ++t) buf[t] = x[t];
  fft_inplace(buf, false);
  buf.resize(n_fft / 2 + 1);
  return buf;
}

// Cepstrally smoothed magnitude: log{|X|}, liftered to `keep` quefrency
// bins, back to the spectral domain, exponentiated.
std::vector<double> smooth_magnitude(const std::vector<std::complex<double>>& spec,
                                     int n_fft, int keep) {
  std::vector<std::complex<double>> buf(n_fft);
  for (int k = 0; k <= n_fft / 2; ++k) {
    const double lm = std::log(std::max(std::abs(spec[k]), kLogFloor));
    buf[k] = lm;
    if (k > 0 && k < n_fft / 2) buf[n_fft - k] = lm;
  }
  fft_inplace(buf, true);
  for (int q = 0; q < n_fft; ++q) {
    const int dist = std::min(q, n_fft - q);
    if (dist >= keep) buf[q] = 0.0;
  }
  fft_inplace(buf, false);
  std::vector<double> s(n_fft / 2 + 1);
  for (int k = 0; k <= n_fft / 2; ++k) s[k] = std::exp(buf[k].real());
  return s;
}

}  // namespace

std::vector<double> mgdf_tau(std::span<const double> frame, const MgdfConfig& cfg) {
  if (!power_of_two(cfg.n_fft) || static_cast<int>(frame.size()) > cfg.n_fft)
    throw std::invalid_argument("mgdf_tau: bad n_fft");
  if (!(cfg.alpha > 0.0) || cfg.alpha > 1.0 || !(cfg.gamma > 0.0) || cfg.gamma > 1.0)
    throw std::invalid_argument("mgdf_tau: alpha and gamma must lie in (0, 1]");

  std::vector<double> ramped(frame.size());
  for (std::size_t t = 0; t < frame.size(); ++t) ramped[t] = t * frame[t];
  const auto x = half_spectrum(frame, cfg.n_fft);
  const auto y = half_spectrum(ramped, cfg.n_fft);

  std::vector<double> s;
  if (cfg.smoothing > 0) {
    s = smooth_magnitude(x, cfg.n_fft, cfg.smoothing);
  } else {
    s.resize(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) s[k] = std::abs(x[k]);
  }

  std::vector<double> tau(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double num = x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    const double den = std::pow(std::max(s[k], kLogFloor), 2.0 * cfg.gamma);
    const double mag = std::pow(std::abs(num) / den, cfg.alpha);
    tau[k] = (num > 0.0) ? mag : (num < 0.0 ? -mag : 0.0);
  }
  return tau;
}

std::vector<double> allpole_group_delay(const LpModel& lp, int n_fft) {
  if (!power_of_two(n_fft) || n_fft < lp.order + 1)
    throw std::invalid_argument("allpole_group_delay: bad n_fft");
  std::vector<double> a(lp.order + 1);
  a[0] = 1.0;
  std::copy(lp.coeffs.begin(), lp.coeffs.end(), a.begin() + 1);
  std::vector<double> ramped(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) ramped[t] = t * a[t];
  const auto x = half_spectrum(a, n_fft);
  const auto y = half_spectrum(ramped, n_fft);

  // group delay of 1/A is the negated group delay of A
  std::vector<double> tau(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double num = x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    const double den = std::max(std::norm(x[k]), kLogFloor * kLogFloor);
    tau[k] = -num / den;
  }
  return tau;
}

std::vector<double> unwrap_phase(std::span<const double> real_part,
                                 std::span<const double> imag_part) {
  if (real_part.size() != imag_part.size())
    throw std::invalid_argument("unwrap_phase: length mismatch");
  std::vector<double> u(real_part.size(), 0.0);
  double prev_raw = 0.0;
  bool have_prev = false;
  for (std::size_t k = 0; k < real_part.size(); ++k) {
    const double mag = std::hypot(real_part[k], imag_part[k]);
    if (mag < kLogFloor) {
      // ill-conditioned bin: carry the previous unwrapped phase forward
      u[k] = (k > 0) ? u[k - 1] : 0.0;
      continue;
    }
    const double raw = std::atan2(imag_part[k], real_part[k]);
    if (!have_prev) {
      u[k] = raw;
    } else {
      double d = raw - prev_raw;
      d -= 2.0 * kPi * std::floor((d + kPi) / (2.0 * kPi));
      u[k] = u[k - 1] + d;
    }
    prev_raw = raw;
    have_prev = true;
  }
  return u;
}

std::vector<double> magnitude_phase_spectrum(std::span<const double> magnitude,
                                             std::span<const double> phase) {
  if (magnitude.size() != phase.size())
    throw std::invalid_argument("magnitude_phase_spectrum: length mismatch");
  std::vector<double> mps(magnitude.size());
  for (std::size_t k = 0; k < magnitude.size(); ++k) {
    const double lm = std::log(std::max(magnitude[k], kLogFloor));
    mps[k] = std::sqrt(lm * lm + phase[k] * phase[k]);
  }
  return mps;
}

namespace {

FeatureMatrix dct_rows(Matrix per_frame, FeatureKind kind, double shift_ms,
                       std::size_t n_ceps) {
  Matrix out(per_frame.rows(), n_ceps);
  std::vector<double> row(per_frame.cols());
  for (std::size_t i = 0; i < per_frame.rows(); ++i) {
    const auto src = per_frame.row(i);
    row.assign(src.begin(), src.end());
    const std::vector<double> c = dct2(row, n_ceps);
    std::copy(c.begin(), c.end(), out.row(i).data());
  }
  FeatureMatrix f;
  f.values = std::move(out);
  f.kind = kind;
  f.frame_shift_ms = shift_ms;
  return f;
}

}  // namespace

FeatureMatrix mgdf(const Waveform& w, const MgdfConfig& cfg) {
  Waveform x;
  x.sample_rate_hz = w.sample_rate_hz;
  x.samples = cfg.preemphasis ? pre_emphasis(w.samples, cfg.preemphasis_coeff) : w.samples;
  const FrameMatrix frames = frame_signal(x, cfg.frame_ms, cfg.shift_ms);
  const std::vector<double> window = hamming_window(frames.frame_len_samples);

  Matrix taus(frames.frames.rows(), cfg.n_fft / 2 + 1);
  std::vector<double> buf(frames.frame_len_samples);
  for (std::size_t i = 0; i < frames.frames.rows(); ++i) {
    const auto frame = frames.frames.row(i);
    for (int t = 0; t < frames.frame_len_samples; ++t) buf[t] = frame[t] * window[t];
    const std::vector<double> tau = mgdf_tau(buf, cfg);
    std::copy(tau.begin(), tau.end(), taus.row(i).data());
  }
  return dct_rows(std::move(taus), FeatureKind::kMgdf, cfg.shift_ms, cfg.n_ceps);
}

FeatureMatrix apgdf(const Waveform& w, const CepstralConfig& cfg) {
  Waveform x;
  x.sample_rate_hz = w.sample_rate_hz;
  x.samples = cfg.preemphasis ? pre_emphasis(w.samples, cfg.preemphasis_coeff) : w.samples;
  const FrameMatrix frames = frame_signal(x, cfg.frame_ms, cfg.shift_ms);
  const std::vector<double> window = hamming_window(frames.frame_len_samples);

  Matrix out(frames.frames.rows(), cfg.n_ceps);
  std::vector<double> buf(frames.frame_len_samples);
  for (std::size_t i = 0; i < frames.frames.rows(); ++i) {
    const auto frame = frames.frames.row(i);
    for (int t = 0; t < frames.frame_len_samples; ++t) buf[t] = frame[t] * window[t];
    const std::vector<double> r = autocorrelation(buf, cfg.lp_order);
    if (r[0] <= 1e-12) continue;  // silent frame -> zero row
    const LpModel lp = levinson_durbin(r, cfg.lp_order);
    const std::vector<double> tau = allpole_group_delay(lp, cfg.n_fft);
    const std::vector<double> c = dct2(tau, cfg.n_ceps);
    std::copy(c.begin(), c.end(), out.row(i).data());
  }
  FeatureMatrix f;
  f.values = std::move(out);
  f.kind = FeatureKind::kApgdf;
  f.frame_shift_ms = cfg.shift_ms;
  return f;
}

FeatureMatrix cosphase(const Waveform& w, const CepstralConfig& cfg) {
  Waveform x;
  x.sample_rate_hz = w.sample_rate_hz;
  x.samples = cfg.preemphasis ? pre_emphasis(w.samples, cfg.preemphasis_coeff) : w.samples;
  const FrameMatrix frames = frame_signal(x, cfg.frame_ms, cfg.shift_ms);
  const std::vector<double> window = hamming_window(frames.frame_len_samples);
  const ComplexSpectrogram spec = dft_complex(frames, window, cfg.n_fft);

  Matrix rows(spec.real_part.rows(), spec.real_part.cols());
  for (std::size_t i = 0; i < spec.real_part.rows(); ++i) {
    const std::vector<double> u = unwrap_phase(spec.real_part.row(i), spec.imag_part.row(i));
    auto dst = rows.row(i);
    for (std::size_t k = 0; k < u.size(); ++k) dst[k] = std::cos(u[k]);
  }
  return dct_rows(std::move(rows), FeatureKind::kCosphase, cfg.shift_ms, cfg.n_ceps);
}

FeatureMatrix cmpoc(const Waveform& w, const CmpocConfig& cfg) {
  const double f_max = w.sample_rate_hz / 2.0;
  const double f_min = f_max / std::exp2(cfg.n_octaves);
  const CqtSpectrogram spec =
      cqt(w, f_min, f_max, cfg.bins_per_octave, cfg.hop_ms, cfg.align_ms);

  const int n_bins = static_cast<int>(spec.magnitude.cols());
  const int b = cfg.bins_per_octave;
  Matrix out(spec.magnitude.rows(), cfg.n_ceps);
  std::vector<double> octave;
  for (std::size_t i = 0; i < spec.magnitude.rows(); ++i) {
    const std::vector<double> mps =
        magnitude_phase_spectrum(spec.magnitude.row(i), spec.phase.row(i));
    auto dst = out.row(i);
    std::size_t written = 0;
    // lowest octave first; the concatenated coefficients are truncated
    for (int start = 0; start < n_bins && written < dst.size(); start += b) {
      const int len = std::min(b, n_bins - start);
      octave.resize(len);
      for (int k = 0; k < len; ++k)
        octave[k] = std::log(std::max(mps[start + k], kLogFloor));
      const std::vector<double> c = dct2(octave, octave.size());
      for (std::size_t k = 0; k < c.size() && written < dst.size(); ++k)
        dst[written++] = c[k];
    }
  }
  FeatureMatrix f;
  f.values = std::move(out);
  f.kind = FeatureKind::kCmpoc;
  f.frame_shift_ms = cfg.hop_ms;
  return f;
}

}  // namespace sigfeat
