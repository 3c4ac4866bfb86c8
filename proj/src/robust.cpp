// src/robust.cpp

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

#include "sigfeat/robust.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace sigfeat {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> gammatone_centers(int n_channels, double f_lo, double f_hi) {
  std::vector<double> centers(n_channels);
  const double e_lo = hz_to_erb_rate(f_lo);
  const double e_hi = hz_to_erb_rate(f_hi);
  for (int m = 0; m < n_channels; ++m) {
    const double step = (n_channels == 1) ? 0.0 : (e_hi - e_lo) / (n_channels - 1);
    centers[m] = erb_rate_to_hz(e_lo + m * step);
  }
  return centers;
}

// First-order smoother at the given cutoff, e[0] = x[0].
void envelope_lowpass(std::vector<double>& x, int fs, double cutoff_hz) {
  if (x.empty()) return;
  const double alpha = 1.0 - std::exp(-2.0 * kPi * cutoff_hz / fs);
  double state = x[0];
  for (double& v : x) {
    state += alpha * (v - state);
    v = state;
  }
}

std::vector<double> hilbert_envelope(const std::vector<double>& s) {
  const auto [x, h] = analytic_signal(s);
  std::vector<double> env(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) env[t] = std::hypot(x[t], h[t]);
  return env;
}

}  // namespace

std::vector<double> gammatone_channel(const std::vector<double>& x, int fs, double fc) {
  if (fs <= 0 || !(fc > 0.0) || fc >= fs / 2.0)
    throw std::invalid_argument("gammatone_channel: center must lie below fs/2");
  const double bw = 1.019 * erb_bandwidth_hz(fc);
  const double decay = std::exp(-2.0 * kPi * bw / fs);
  const std::complex<double> pole =
      decay * std::complex<double>(std::cos(2.0 * kPi * fc / fs), std::sin(2.0 * kPi * fc / fs));
  const double stage_gain = 1.0 - decay;  // unit response at fc per stage

  std::vector<std::complex<double>> state(4, {0.0, 0.0});
  std::vector<double> y(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    std::complex<double> v = x[t];
    for (auto& s : state) {
      s = stage_gain * v + pole * s;
      v = s;
    }
    y[t] = 2.0 * v.real();
  }
  return y;
}

EnvelopeBank mhec_envelopes(const Waveform& w, const MhecConfig& cfg) {
  if (cfg.n_channels < 1) throw std::invalid_argument("mhec_envelopes: need at least one channel");
  const std::vector<double> x =
      cfg.preemphasis ? pre_emphasis(w.samples, cfg.preemphasis_coeff) : w.samples;

  EnvelopeBank bank;
  bank.channel_center_freqs_hz = gammatone_centers(cfg.n_channels, cfg.f_lo_hz, cfg.f_hi_hz);
  bank.envelopes = Matrix(cfg.n_channels, x.size());
  for (int m = 0; m < cfg.n_channels; ++m) {
    const std::vector<double> env =
        hilbert_envelope(gammatone_channel(x, w.sample_rate_hz, bank.channel_center_freqs_hz[m]));
    std::copy(env.begin(), env.end(), bank.envelopes.row(m).data());
  }
  return bank;
}

FeatureMatrix mhec(const Waveform& w, const MhecConfig& cfg) {
  if (cfg.n_channels < 1) throw std::invalid_argument("mhec: need at least one channel");
  const std::vector<double> x =
      cfg.preemphasis ? pre_emphasis(w.samples, cfg.preemphasis_coeff) : w.samples;
  const std::vector<double> centers =
      gammatone_centers(cfg.n_channels, cfg.f_lo_hz, cfg.f_hi_hz);
  const std::size_t n_ceps = std::min<std::size_t>(cfg.n_ceps, cfg.n_channels);

  // one channel at a time; a materialized envelope bank would be large
  Matrix energies;
  Waveform env_wave;
  env_wave.sample_rate_hz = w.sample_rate_hz;
  for (int m = 0; m < cfg.n_channels; ++m) {
    std::vector<double> env = hilbert_envelope(gammatone_channel(x, w.sample_rate_hz, centers[m]));
    envelope_lowpass(env, w.sample_rate_hz, cfg.envelope_lowpass_hz);
    env_wave.samples = std::move(env);
    const FrameMatrix frames = frame_signal(env_wave, cfg.frame_ms, cfg.shift_ms);
    if (energies.empty()) energies = Matrix(frames.frames.rows(), cfg.n_channels);
    for (std::size_t i = 0; i < frames.frames.rows(); ++i) {
      const auto row = frames.frames.row(i);
      double acc = 0.0;
      for (double v : row) acc += v;
      energies(i, m) = acc / row.size();
    }
  }

  Matrix out(energies.rows(), n_ceps);
  std::vector<double> logs(cfg.n_channels);
  for (std::size_t i = 0; i < energies.rows(); ++i) {
    const auto row = energies.row(i);
    for (std::size_t m = 0; m < row.size(); ++m) logs[m] = std::log(std::max(row[m], kLogFloor));
    const std::vector<double> c = dct2(logs, n_ceps);
    std::copy(c.begin(), c.end(), out.row(i).data());
  }
  FeatureMatrix f;
  f.values = std::move(out);
  f.kind = FeatureKind::kMhec;
  f.frame_shift_ms = cfg.shift_ms;
  return f;
}

std::vector<double> asymmetric_lowpass(const std::vector<double>& in,
                                       double lambda_rise, double lambda_fall) {
  std::vector<double> out(in.size());
  if (in.empty()) return out;
  out[0] = in[0];
  for (std::size_t m = 1; m < in.size(); ++m) {
    const double lambda = (in[m] >= out[m - 1]) ? lambda_rise : lambda_fall;
    out[m] = lambda * out[m - 1] + (1.0 - lambda) * in[m];
  }
  return out;
}

MediumTimePower medium_time_power(const Matrix& short_time, int window_frames) {
  if (window_frames < 0) throw std::invalid_argument("medium_time_power: negative window");
  MediumTimePower out;
  out.window_frames = window_frames;
  out.power = Matrix(short_time.rows(), short_time.cols());
  const long n = static_cast<long>(short_time.rows());
  for (long i = 0; i < n; ++i) {
    const long lo = std::max(0L, i - window_frames);
    const long hi = std::min(n - 1, i + window_frames);
    for (std::size_t l = 0; l < short_time.cols(); ++l) {
      double acc = 0.0;
      for (long j = lo; j <= hi; ++j) acc += short_time(j, l);
      out.power(i, l) = acc / (hi - lo + 1);
    }
  }
  return out;
}

FeatureMatrix pncc(const Waveform& w, const PnccConfig& cfg) {
  Waveform x;
  x.sample_rate_hz = w.sample_rate_hz;
  x.samples = cfg.preemphasis ? pre_emphasis(w.samples, cfg.preemphasis_coeff) : w.samples;
  const FrameMatrix frames = frame_signal(x, cfg.frame_ms, cfg.shift_ms);
  const std::vector<double> window = hamming_window(frames.frame_len_samples);
  const PowerSpectrogram spec = power_spectrum(dft_complex(frames, window, cfg.n_fft));

  const double f_hi = cfg.f_hi_hz > 0.0 ? cfg.f_hi_hz : w.sample_rate_hz / 2.0;
  const FilterBank bank = make_filterbank(FilterScale::kGammatone, cfg.n_channels,
                                          cfg.n_fft, w.sample_rate_hz, cfg.f_lo_hz, f_hi);

  // short-time gammatone power (squared magnitude response weights)
  const std::size_t n_frames = spec.power.rows();
  const std::size_t n_chan = cfg.n_channels;
  Matrix p(n_frames, n_chan);
  for (std::size_t i = 0; i < n_frames; ++i) {
    const auto pr = spec.power.row(i);
    for (std::size_t l = 0; l < n_chan; ++l) {
      const auto h = bank.weights.row(l);
      double acc = 0.0;
      for (std::size_t k = 0; k < pr.size(); ++k) acc += h[k] * h[k] * pr[k];
      p(i, l) = acc;
    }
  }

  const MediumTimePower medium = medium_time_power(p, cfg.medium_window_frames);

  // noise-floor subtraction and temporal masking, per channel over time
  Matrix masked(n_frames, n_chan);
  std::vector<double> column(n_frames);
  for (std::size_t l = 0; l < n_chan; ++l) {
    for (std::size_t i = 0; i < n_frames; ++i) column[i] = medium.power(i, l);
    const std::vector<double> floor_track =
        asymmetric_lowpass(column, cfg.lambda_rise, cfg.lambda_fall);
    double peak = 0.0;
    for (std::size_t i = 0; i < n_frames; ++i) {
      const double rectified = std::max(column[i] - floor_track[i], 0.0);
      if (i == 0) {
        peak = rectified;
        masked(i, l) = rectified;
        continue;
      }
      const double gate = cfg.lambda_masking * peak;
      masked(i, l) = (rectified >= gate) ? rectified : cfg.mu_masking * peak;
      peak = std::max(gate, rectified);
    }
  }

  // smooth the masked/medium ratio across channels, then scale the
  // short-time power with it
  Matrix transferred(n_frames, n_chan);
  for (std::size_t i = 0; i < n_frames; ++i) {
    for (std::size_t l = 0; l < n_chan; ++l) {
      const long lo = std::max<long>(0, static_cast<long>(l) - cfg.smoothing_halfwidth);
      const long hi = std::min<long>(n_chan - 1, l + cfg.smoothing_halfwidth);
      double acc = 0.0;
      for (long j = lo; j <= hi; ++j)
        acc += masked(i, j) / std::max(medium.power(i, j), kLogFloor);
      transferred(i, l) = p(i, l) * acc / (hi - lo + 1);
    }
  }

  // running mean power normalization, utterance-local
  Matrix normalized(n_frames, n_chan);
  double mean_power = 0.0;
  for (std::size_t i = 0; i < n_frames; ++i) {
    double frame_mean = 0.0;
    for (std::size_t l = 0; l < n_chan; ++l) frame_mean += transferred(i, l);
    frame_mean /= n_chan;
    mean_power = (i == 0) ? frame_mean
                          : cfg.lambda_mean_power * mean_power +
                                (1.0 - cfg.lambda_mean_power) * frame_mean;
    const double denom = std::max(mean_power, kLogFloor);
    for (std::size_t l = 0; l < n_chan; ++l) normalized(i, l) = transferred(i, l) / denom;
  }

  Matrix out(n_frames, cfg.n_ceps);
  std::vector<double> compressed(n_chan);
  for (std::size_t i = 0; i < n_frames; ++i) {
    for (std::size_t l = 0; l < n_chan; ++l)
      compressed[l] = std::pow(std::max(normalized(i, l), kLogFloor), cfg.power_exponent);
    const std::vector<double> c = dct2(compressed, cfg.n_ceps);
    std::copy(c.begin(), c.end(), out.row(i).data());
  }
  FeatureMatrix f;
  f.values = std::move(out);
  f.kind = FeatureKind::kPncc;
  f.frame_shift_ms = cfg.shift_ms;
  return f;
}

}  // namespace sigfeat
