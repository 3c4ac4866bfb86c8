// src/spectral.cpp

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

#include "sigfeat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sigfeat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSilentFrame = 1e-12;

Waveform preprocess(const Waveform& w, bool preemphasis, double coeff) {
  Waveform out;
  out.sample_rate_hz = w.sample_rate_hz;
  out.samples = preemphasis ? pre_emphasis(w.samples, coeff) : w.samples;
  return out;
}

double band_high_edge(const CepstralConfig& cfg, int fs) {
  return cfg.f_hi_hz > 0.0 ? cfg.f_hi_hz : fs / 2.0;
}

PowerSpectrogram stft_power(const Waveform& w, const CepstralConfig& cfg) {
  const FrameMatrix frames = frame_signal(w, cfg.frame_ms, cfg.shift_ms);
  const std::vector<double> window = hamming_window(frames.frame_len_samples);
  return power_spectrum(dft_complex(frames, window, cfg.n_fft));
}

FeatureMatrix tag(Matrix values, FeatureKind kind, double shift_ms) {
  FeatureMatrix f;
  f.values = std::move(values);
  f.kind = kind;
  f.frame_shift_ms = shift_ms;
  return f;
}

}  // namespace

// Hermansky's equal-loudness approximation.
double plp_equal_loudness(double f_hz) {
  const double f2 = f_hz * f_hz;
  const double t1 = f2 / (f2 + 1.6e5);
  return t1 * t1 * (f2 + 1.44e6) / (f2 + 9.61e6);
}

Matrix apply_filterbank(const PowerSpectrogram& spec, const FilterBank& bank) {
  if (bank.weights.cols() != spec.power.cols())
    throw std::invalid_argument("apply_filterbank: bin count mismatch");
  Matrix out(spec.power.rows(), bank.weights.rows());
  for (std::size_t i = 0; i < spec.power.rows(); ++i) {
    const auto p = spec.power.row(i);
    for (std::size_t m = 0; m < bank.weights.rows(); ++m) {
      const auto wt = bank.weights.row(m);
      double acc = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) acc += wt[k] * p[k];
      out(i, m) = acc;
    }
  }
  return out;
}

Matrix log_dct(const Matrix& energies, std::size_t n_ceps) {
  if (n_ceps > energies.cols()) throw std::invalid_argument("log_dct: n_ceps exceeds band count");
  Matrix out(energies.rows(), n_ceps);
  std::vector<double> logs(energies.cols());
  for (std::size_t i = 0; i < energies.rows(); ++i) {
    const auto row = energies.row(i);
    for (std::size_t m = 0; m < row.size(); ++m) logs[m] = std::log(std::max(row[m], kLogFloor));
    const std::vector<double> c = dct2(logs, n_ceps);
    std::copy(c.begin(), c.end(), out.row(i).data());
  }
  return out;
}

FeatureMatrix mfcc(const Waveform& w, const CepstralConfig& cfg) {
  const Waveform x = preprocess(w, cfg.preemphasis, cfg.preemphasis_coeff);
  const PowerSpectrogram power = stft_power(x, cfg);
  const FilterBank bank = make_filterbank(FilterScale::kMel, cfg.n_filters, cfg.n_fft,
                                          w.sample_rate_hz, cfg.f_lo_hz,
                                          band_high_edge(cfg, w.sample_rate_hz));
  return tag(log_dct(apply_filterbank(power, bank), cfg.n_ceps), FeatureKind::kMfcc,
             cfg.shift_ms);
}

FeatureMatrix multitaper_mfcc(const Waveform& w, const CepstralConfig& cfg,
                              int n_tapers, TaperWeighting weighting) {
  const Waveform x = preprocess(w, cfg.preemphasis, cfg.preemphasis_coeff);
  const FrameMatrix frames = frame_signal(x, cfg.frame_ms, cfg.shift_ms);
  const TaperSet tapers = sine_tapers(frames.frame_len_samples, n_tapers, weighting);
  const PowerSpectrogram power = multitaper_spectrum(frames, tapers, cfg.n_fft);
  const FilterBank bank = make_filterbank(FilterScale::kMel, cfg.n_filters, cfg.n_fft,
                                          w.sample_rate_hz, cfg.f_lo_hz,
                                          band_high_edge(cfg, w.sample_rate_hz));
  return tag(log_dct(apply_filterbank(power, bank), cfg.n_ceps),
             FeatureKind::kMultitaperMfcc, cfg.shift_ms);
}

FeatureMatrix lpcc(const Waveform& w, const CepstralConfig& cfg) {
  const Waveform x = preprocess(w, cfg.preemphasis, cfg.preemphasis_coeff);
  const FrameMatrix frames = frame_signal(x, cfg.frame_ms, cfg.shift_ms);
  const std::vector<double> window = hamming_window(frames.frame_len_samples);

  Matrix out(frames.frames.rows(), cfg.n_ceps);
  std::vector<double> buf(frames.frame_len_samples);
  for (std::size_t i = 0; i < frames.frames.rows(); ++i) {
    const auto frame = frames.frames.row(i);
    for (int t = 0; t < frames.frame_len_samples; ++t) buf[t] = frame[t] * window[t];
    const std::vector<double> r = autocorrelation(buf, cfg.lp_order);
    if (r[0] <= kSilentFrame) continue;  // silent frame -> zero row
    const LpModel lp = levinson_durbin(r, cfg.lp_order);
    if (!(lp.residual_energy > 0.0)) continue;
    const std::vector<double> c = lpc_to_cepstrum(lp, cfg.n_ceps);
    std::copy(c.begin() + 1, c.end(), out.row(i).data());  // c_1..c_n
  }
  return tag(std::move(out), FeatureKind::kLpcc, cfg.shift_ms);
}

FeatureMatrix plpcc(const Waveform& w, const CepstralConfig& cfg) {
  const Waveform x = preprocess(w, cfg.preemphasis, cfg.preemphasis_coeff);
  const PowerSpectrogram power = stft_power(x, cfg);
  const FilterBank bank = make_filterbank(FilterScale::kBark, cfg.n_filters, cfg.n_fft,
                                          w.sample_rate_hz, cfg.f_lo_hz,
                                          band_high_edge(cfg, w.sample_rate_hz));
  const Matrix bands = apply_filterbank(power, bank);

  std::vector<double> loudness_weight(bank.center_freqs_hz.size());
  for (std::size_t m = 0; m < loudness_weight.size(); ++m)
    loudness_weight[m] = plp_equal_loudness(bank.center_freqs_hz[m]);

  const int n_bands = static_cast<int>(bands.cols());
  if (n_bands < 2) throw std::invalid_argument("plpcc: need at least 2 filters");
  const int n_sym = 2 * (n_bands - 1);  // mirrored loudness spectrum
  Matrix out(bands.rows(), cfg.n_ceps);
  std::vector<double> compressed(n_bands);
  std::vector<double> r(cfg.lp_order + 1);
  for (std::size_t i = 0; i < bands.rows(); ++i) {
    const auto row = bands.row(i);
    double total = 0.0;
    for (int m = 0; m < n_bands; ++m) {
      compressed[m] = std::cbrt(std::max(row[m] * loudness_weight[m], 0.0));
      total += compressed[m];
    }
    if (total <= kSilentFrame) continue;

    // autocorrelation of the mirrored loudness spectrum; the last band sits
    // at the fold point so it enters once, every interior band twice
    for (int lag = 0; lag <= cfg.lp_order; ++lag) {
      double acc = compressed[0] +
                   compressed[n_bands - 1] * std::cos(kPi * lag);
      for (int m = 1; m < n_bands - 1; ++m)
        acc += 2.0 * compressed[m] * std::cos(2.0 * kPi * m * lag / n_sym);
      r[lag] = acc / n_sym;
    }
    r[0] *= 1.0001;  // white-noise floor keeps the Toeplitz system well posed
    if (!(r[0] > 0.0)) continue;
    const LpModel lp = levinson_durbin(r, cfg.lp_order);
    if (!(lp.residual_energy > 0.0)) continue;
    const std::vector<double> c = lpc_to_cepstrum(lp, cfg.n_ceps);
    std::copy(c.begin() + 1, c.end(), out.row(i).data());
  }
  return tag(std::move(out), FeatureKind::kPlpcc, cfg.shift_ms);
}

FeatureMatrix scfc(const Waveform& w, const CepstralConfig& cfg) {
  const Waveform x = preprocess(w, cfg.preemphasis, cfg.preemphasis_coeff);
  const PowerSpectrogram power = stft_power(x, cfg);
  const int fs = w.sample_rate_hz;
  const double f_hi = band_high_edge(cfg, fs);
  const FilterBank bank =
      make_filterbank(FilterScale::kMel, cfg.n_filters, cfg.n_fft, fs, cfg.f_lo_hz, f_hi);
  const double bin_hz = static_cast<double>(fs) / cfg.n_fft;

  // geometric center of each subband's support, the zero-energy fallback
  std::vector<double> fallback(bank.center_freqs_hz.size());
  for (std::size_t m = 0; m < fallback.size(); ++m) {
    const double left = (m == 0) ? std::max(cfg.f_lo_hz, 1.0) : bank.center_freqs_hz[m - 1];
    const double right = (m + 1 == fallback.size()) ? f_hi : bank.center_freqs_hz[m + 1];
    fallback[m] = std::sqrt(left * right);
  }

  Matrix out(power.power.rows(), bank.weights.rows());
  for (std::size_t i = 0; i < power.power.rows(); ++i) {
    const auto p = power.power.row(i);
    for (std::size_t m = 0; m < bank.weights.rows(); ++m) {
      const auto wt = bank.weights.row(m);
      double num = 0.0, den = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) {
        const double wp = wt[k] * p[k];
        num += k * bin_hz * wp;
        den += wp;
      }
      out(i, m) = (den > kSilentFrame) ? num / den : fallback[m];
    }
  }
  return tag(std::move(out), FeatureKind::kScfc, cfg.shift_ms);
}

FeatureMatrix scmc(const Waveform& w, const CepstralConfig& cfg) {
  const Waveform x = preprocess(w, cfg.preemphasis, cfg.preemphasis_coeff);
  PowerSpectrogram power = stft_power(x, cfg);
  // normalized-frequency weighting k / n_bins before band integration
  const double inv_bins = 1.0 / static_cast<double>(power.power.cols());
  for (std::size_t i = 0; i < power.power.rows(); ++i) {
    auto row = power.power.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) row[k] *= k * inv_bins;
  }
  const FilterBank bank = make_filterbank(FilterScale::kMel, cfg.n_filters, cfg.n_fft,
                                          w.sample_rate_hz, cfg.f_lo_hz,
                                          band_high_edge(cfg, w.sample_rate_hz));
  return tag(log_dct(apply_filterbank(power, bank), cfg.n_ceps), FeatureKind::kScmc,
             cfg.shift_ms);
}

FeatureMatrix cqcc(const Waveform& w, const CqccConfig& cfg) {
  const double f_max = w.sample_rate_hz / 2.0;
  const double f_min = f_max / std::exp2(cfg.n_octaves);
  const CqtSpectrogram spec =
      cqt(w, f_min, f_max, cfg.bins_per_octave, cfg.hop_ms, cfg.align_ms);

  const int n_bins = static_cast<int>(spec.magnitude.cols());
  const int n_pts = cfg.resample_points;
  if (cfg.n_ceps > n_pts) throw std::invalid_argument("cqcc: n_ceps exceeds resample grid");

  // positions of the uniform linear-frequency grid on the geometric bin axis
  const double f_top = f_min * std::exp2(static_cast<double>(n_bins - 1) / cfg.bins_per_octave);
  std::vector<int> idx0(n_pts);
  std::vector<double> frac(n_pts);
  for (int j = 0; j < n_pts; ++j) {
    const double f = f_min + (f_top - f_min) * j / (n_pts - 1);
    double pos = cfg.bins_per_octave * std::log2(f / f_min);
    pos = std::clamp(pos, 0.0, static_cast<double>(n_bins - 1));
    idx0[j] = std::min(static_cast<int>(pos), n_bins - 2);
    frac[j] = pos - idx0[j];
  }

  Matrix out(spec.magnitude.rows(), cfg.n_ceps);
  std::vector<double> logp(n_bins), resampled(n_pts);
  for (std::size_t i = 0; i < spec.magnitude.rows(); ++i) {
    const auto mag = spec.magnitude.row(i);
    for (int k = 0; k < n_bins; ++k)
      logp[k] = std::log(std::max(mag[k] * mag[k], kLogFloor));
    for (int j = 0; j < n_pts; ++j)
      resampled[j] = logp[idx0[j]] * (1.0 - frac[j]) + logp[idx0[j] + 1] * frac[j];
    const std::vector<double> c = dct2(resampled, cfg.n_ceps);
    std::copy(c.begin(), c.end(), out.row(i).data());
  }
  FeatureMatrix f = tag(std::move(out), FeatureKind::kCqcc, cfg.hop_ms);
  return f;
}

}  // namespace sigfeat
