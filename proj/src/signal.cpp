// src/signal.cpp

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

#include "sigfeat/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace sigfeat {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int next_power_of_two(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

std::vector<double> pre_emphasis(const std::vector<double>& x, double coeff) {
  std::vector<double> y(x.size());
  if (x.empty()) return y;
  y[0] = x[0] * (1.0 - coeff);
  for (std::size_t n = 1; n < x.size(); ++n) y[n] = x[n] - coeff * x[n - 1];
  return y;
}

FrameMatrix frame_signal(const Waveform& w, double frame_ms, double shift_ms) {
  if (w.sample_rate_hz <= 0) throw std::invalid_argument("frame_signal: sample rate must be positive");
  if (!(shift_ms > 0.0) || frame_ms < shift_ms)
    throw std::invalid_argument("frame_signal: need frame_ms >= shift_ms > 0");
  const int len = static_cast<int>(std::lround(frame_ms / 1000.0 * w.sample_rate_hz));
  const int shift = static_cast<int>(std::lround(shift_ms / 1000.0 * w.sample_rate_hz));
  if (len < 1 || shift < 1) throw std::invalid_argument("frame_signal: frame and shift must span at least one sample");
  if (static_cast<int>(w.samples.size()) < len)
    throw std::invalid_argument("frame_signal: signal shorter than one frame");

  const std::size_t n_frames = 1 + (w.samples.size() - len) / shift;
  FrameMatrix out;
  out.frames = Matrix(n_frames, len);
  out.frame_len_samples = len;
  out.frame_shift_samples = shift;
  out.sample_rate_hz = w.sample_rate_hz;
  for (std::size_t i = 0; i < n_frames; ++i) {
    const double* src = w.samples.data() + i * shift;
    std::copy(src, src + len, out.frames.row(i).data());
  }
  return out;
}

std::vector<double> hamming_window(int n) {
  if (n < 1) throw std::invalid_argument("hamming_window: n must be >= 1");
  std::vector<double> w(n, 1.0);
  if (n == 1) return w;
  for (int t = 0; t < n; ++t) w[t] = 0.54 - 0.46 * std::cos(2.0 * kPi * t / (n - 1));
  return w;
}

std::vector<double> hann_window(int n) {
  if (n < 1) throw std::invalid_argument("hann_window: n must be >= 1");
  std::vector<double> w(n, 1.0);
  if (n == 1) return w;
  for (int t = 0; t < n; ++t) w[t] = 0.5 * (1.0 - std::cos(2.0 * kPi * t / (n - 1)));
  return w;
}

TaperSet sine_tapers(int n, int k, TaperWeighting weighting) {
  if (k < 1) throw std::invalid_argument("sine_tapers: k must be >= 1");
  if (k >= n) throw std::invalid_argument("sine_tapers: need k < n");
  TaperSet set;
  set.tapers = Matrix(k, n);
  const double norm = std::sqrt(2.0 / (n + 1));
  for (int j = 1; j <= k; ++j)
    for (int t = 0; t < n; ++t)
      set.tapers(j - 1, t) = norm * std::sin(kPi * j * (t + 1) / (n + 1));

  set.weights.assign(k, 1.0 / k);
  if (weighting == TaperWeighting::kCosine) {
    double sum = 0.0;
    for (int j = 1; j <= k; ++j) {
      const double c = std::cos(kPi * j / (2.0 * (k + 1)));
      set.weights[j - 1] = c * c;
      sum += c * c;
    }
    for (double& v : set.weights) v /= sum;
  }
  return set;
}

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("fft_inplace: size must be a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& v : a) v *= inv;
  }
}

ComplexSpectrogram dft_complex(const FrameMatrix& frames,
                               const std::vector<double>& window, int n_fft) {
  const int len = frames.frame_len_samples;
  if (!is_power_of_two(n_fft)) throw std::invalid_argument("dft_complex: n_fft must be a power of two");
  if (n_fft < len) throw std::invalid_argument("dft_complex: n_fft smaller than frame length");
  if (static_cast<int>(window.size()) != len)
    throw std::invalid_argument("dft_complex: window length must equal frame length");

  const std::size_t n_bins = static_cast<std::size_t>(n_fft) / 2 + 1;
  ComplexSpectrogram out;
  out.real_part = Matrix(frames.frames.rows(), n_bins);
  out.imag_part = Matrix(frames.frames.rows(), n_bins);
  out.n_fft = n_fft;
  out.sample_rate_hz = frames.sample_rate_hz;

  std::vector<std::complex<double>> buf(n_fft);
  for (std::size_t i = 0; i < frames.frames.rows(); ++i) {
    const auto frame = frames.frames.row(i);
    for (int t = 0; t < len; ++t) buf[t] = frame[t] * window[t];
    std::fill(buf.begin() + len, buf.end(), std::complex<double>(0.0, 0.0));
    fft_inplace(buf, false);
    for (std::size_t k = 0; k < n_bins; ++k) {
      out.real_part(i, k) = buf[k].real();
      out.imag_part(i, k) = buf[k].imag();
    }
  }
  return out;
}

PowerSpectrogram power_spectrum(const ComplexSpectrogram& spec) {
  PowerSpectrogram out;
  out.power = Matrix(spec.real_part.rows(), spec.real_part.cols());
  out.n_fft = spec.n_fft;
  out.sample_rate_hz = spec.sample_rate_hz;
  for (std::size_t i = 0; i < out.power.rows(); ++i)
    for (std::size_t k = 0; k < out.power.cols(); ++k) {
      const double re = spec.real_part(i, k);
      const double im = spec.imag_part(i, k);
      out.power(i, k) = re * re + im * im;
    }
  return out;
}

PowerSpectrogram multitaper_spectrum(const FrameMatrix& frames,
                                     const TaperSet& tapers, int n_fft) {
  const int len = frames.frame_len_samples;
  if (static_cast<int>(tapers.tapers.cols()) != len)
    throw std::invalid_argument("multitaper_spectrum: taper length must equal frame length");
  if (tapers.tapers.rows() != tapers.weights.size())
    throw std::invalid_argument("multitaper_spectrum: one weight per taper required");
  if (!is_power_of_two(n_fft) || n_fft < len)
    throw std::invalid_argument("multitaper_spectrum: bad n_fft");

  const std::size_t n_bins = static_cast<std::size_t>(n_fft) / 2 + 1;
  PowerSpectrogram out;
  out.power = Matrix(frames.frames.rows(), n_bins);
  out.n_fft = n_fft;
  out.sample_rate_hz = frames.sample_rate_hz;

  std::vector<std::complex<double>> buf(n_fft);
  for (std::size_t i = 0; i < frames.frames.rows(); ++i) {
    const auto frame = frames.frames.row(i);
    for (std::size_t j = 0; j < tapers.tapers.rows(); ++j) {
      const auto taper = tapers.tapers.row(j);
      const double lambda = tapers.weights[j];
      for (int t = 0; t < len; ++t) buf[t] = frame[t] * taper[t];
      std::fill(buf.begin() + len, buf.end(), std::complex<double>(0.0, 0.0));
      fft_inplace(buf, false);
      for (std::size_t k = 0; k < n_bins; ++k) out.power(i, k) += lambda * std::norm(buf[k]);
    }
  }
  return out;
}

namespace {

// Orthonormal DCT-II basis, cached per (input length, output length). The
// cache is thread-local so concurrent extraction never shares state.
const Matrix& dct_basis(std::size_t n, std::size_t n_out) {
  thread_local std::unordered_map<std::uint64_t, Matrix> cache;
  const std::uint64_t key = (static_cast<std::uint64_t>(n) << 32) | n_out;
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Matrix basis(n_out, n);
  const double s0 = std::sqrt(1.0 / static_cast<double>(n));
  const double s = std::sqrt(2.0 / static_cast<double>(n));
  for (std::size_t k = 0; k < n_out; ++k)
    for (std::size_t t = 0; t < n; ++t)
      basis(k, t) = (k == 0 ? s0 : s) *
                    std::cos(kPi * (2.0 * t + 1.0) * k / (2.0 * static_cast<double>(n)));
  return cache.emplace(key, std::move(basis)).first->second;
}

}  // namespace

std::vector<double> dct2(const std::vector<double>& x, std::size_t n_out) {
  if (x.empty()) throw std::invalid_argument("dct2: empty input");
  if (n_out > x.size()) throw std::invalid_argument("dct2: n_out exceeds input length");
  const Matrix& basis = dct_basis(x.size(), n_out);
  std::vector<double> y(n_out, 0.0);
  for (std::size_t k = 0; k < n_out; ++k) {
    const auto row = basis.row(k);
    double acc = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) acc += row[t] * x[t];
    y[k] = acc;
  }
  return y;
}

std::vector<double> idct2(const std::vector<double>& x) {
  if (x.empty()) throw std::invalid_argument("idct2: empty input");
  const Matrix& basis = dct_basis(x.size(), x.size());
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t t = 0; t < x.size(); ++t) {
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) acc += basis(k, t) * x[k];
    y[t] = acc;
  }
  return y;
}

double hz_to_mel(double f) { return 1127.0 * std::log1p(f / 700.0); }
double mel_to_hz(double m) { return 700.0 * std::expm1(m / 1127.0); }
double hz_to_bark(double f) { return 6.0 * std::asinh(f / 600.0); }
double bark_to_hz(double b) { return 600.0 * std::sinh(b / 6.0); }
double hz_to_erb_rate(double f) { return 21.4 * std::log10(1.0 + 0.00437 * f); }
double erb_rate_to_hz(double e) { return (std::pow(10.0, e / 21.4) - 1.0) / 0.00437; }
double erb_bandwidth_hz(double f) { return 24.7 * (4.37 * f / 1000.0 + 1.0); }

FilterBank make_filterbank(FilterScale scale, int n_filters, int n_fft, int fs,
                           double f_lo, double f_hi) {
  if (n_filters < 1) throw std::invalid_argument("make_filterbank: n_filters must be >= 1");
  if (fs <= 0 || n_fft < 2) throw std::invalid_argument("make_filterbank: bad fs or n_fft");
  if (!(f_lo >= 0.0) || !(f_lo < f_hi) || f_hi > fs / 2.0)
    throw std::invalid_argument("make_filterbank: need 0 <= f_lo < f_hi <= fs/2");

  const std::size_t n_bins = static_cast<std::size_t>(n_fft) / 2 + 1;
  const double bin_hz = static_cast<double>(fs) / n_fft;
  FilterBank bank;
  bank.scale = scale;
  bank.weights = Matrix(n_filters, n_bins);

  if (scale == FilterScale::kGammatone) {
    const double e_lo = hz_to_erb_rate(f_lo);
    const double e_hi = hz_to_erb_rate(f_hi);
    for (int m = 0; m < n_filters; ++m) {
      const double step = (n_filters == 1) ? 0.0 : (e_hi - e_lo) / (n_filters - 1);
      const double fc = erb_rate_to_hz(e_lo + m * step);
      const double b = 1.019 * erb_bandwidth_hz(fc);
      bank.center_freqs_hz.push_back(fc);
      for (std::size_t k = 0; k < n_bins; ++k) {
        const double d = (k * bin_hz - fc) / b;
        bank.weights(m, k) = 1.0 / ((1.0 + d * d) * (1.0 + d * d));
      }
    }
    return bank;
  }

  auto warp = [scale](double f) {
    switch (scale) {
      case FilterScale::kMel: return hz_to_mel(f);
      case FilterScale::kBark: return hz_to_bark(f);
      default: return f;
    }
  };
  auto unwarp = [scale](double v) {
    switch (scale) {
      case FilterScale::kMel: return mel_to_hz(v);
      case FilterScale::kBark: return bark_to_hz(v);
      default: return v;
    }
  };

  // n_filters + 2 boundary points uniform on the warped axis; filter m
  // rises over [p(m-1), p(m)] and falls over [p(m), p(m+1)], peak 1.
  const double w_lo = warp(f_lo);
  const double w_hi = warp(f_hi);
  std::vector<double> edges(n_filters + 2);
  for (int m = 0; m < n_filters + 2; ++m)
    edges[m] = unwarp(w_lo + (w_hi - w_lo) * m / (n_filters + 1));

  for (int m = 1; m <= n_filters; ++m) {
    const double left = edges[m - 1], center = edges[m], right = edges[m + 1];
    bank.center_freqs_hz.push_back(center);
    bool any = false;
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double f = k * bin_hz;
      double v = 0.0;
      if (f > left && f < center)
        v = (f - left) / (center - left);
      else if (f >= center && f < right)
        v = (right - f) / (right - center);
      bank.weights(m - 1, k) = v;
      any = any || v > 0.0;
    }
    if (!any) {
      // filter narrower than one FFT bin; pin it to the nearest bin
      const std::size_t k = std::min<std::size_t>(n_bins - 1, static_cast<std::size_t>(std::lround(center / bin_hz)));
      bank.weights(m - 1, k) = 1.0;
    }
  }
  return bank;
}

std::vector<double> autocorrelation(std::span<const double> x, int max_lag) {
  if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= x.size())
    throw std::invalid_argument("autocorrelation: max_lag must be < length");
  std::vector<double> r(max_lag + 1, 0.0);
  for (int lag = 0; lag <= max_lag; ++lag) {
    double acc = 0.0;
    for (std::size_t n = 0; n + lag < x.size(); ++n) acc += x[n] * x[n + lag];
    r[lag] = acc;
  }
  return r;
}

LpModel levinson_durbin(const std::vector<double>& autocorr, int order) {
  if (order < 1) throw std::invalid_argument("levinson_durbin: order must be >= 1");
  if (static_cast<int>(autocorr.size()) < order + 1)
    throw std::invalid_argument("levinson_durbin: need order+1 autocorrelation lags");
  if (!(autocorr[0] > 0.0))
    throw std::domain_error("levinson_durbin: silent frame (autocorr[0] <= 0)");

  std::vector<double> a(order + 1, 0.0);
  a[0] = 1.0;
  double err = autocorr[0];
  for (int i = 1; i <= order; ++i) {
    if (!(err > 0.0)) break;  // singular system; keep the shorter predictor
    double acc = autocorr[i];
    for (int j = 1; j < i; ++j) acc += a[j] * autocorr[i - j];
    double k = -acc / err;
    k = std::clamp(k, -1.0, 1.0);
    for (int j = 1; j <= i / 2; ++j) {
      const double aj = a[j] + k * a[i - j];
      const double aij = a[i - j] + k * a[j];
      a[j] = aj;
      a[i - j] = aij;
    }
    a[i] = k;
    err *= (1.0 - k * k);
  }

  LpModel model;
  model.order = order;
  model.coeffs.assign(a.begin() + 1, a.end());
  model.residual_energy = std::max(err, 0.0);
  return model;
}

std::vector<double> lpc_to_cepstrum(const LpModel& lp, int n_ceps) {
  if (n_ceps < 1) throw std::invalid_argument("lpc_to_cepstrum: n_ceps must be >= 1");
  if (!(lp.residual_energy > 0.0))
    throw std::domain_error("lpc_to_cepstrum: residual energy must be positive");
  auto coeff = [&lp](int m) -> double {
    return (m >= 1 && m <= lp.order) ? lp.coeffs[m - 1] : 0.0;
  };
  std::vector<double> c(n_ceps + 1, 0.0);
  c[0] = std::log(lp.residual_energy);
  for (int n = 1; n <= n_ceps; ++n) {
    double acc = -coeff(n);
    for (int k = 1; k < n; ++k) acc -= (static_cast<double>(k) / n) * c[k] * coeff(n - k);
    c[n] = acc;
  }
  return c;
}

std::pair<std::vector<double>, std::vector<double>> analytic_signal(
    const std::vector<double>& x) {
  if (x.size() < 2) throw std::invalid_argument("analytic_signal: need at least 2 samples");
  const int n = static_cast<int>(x.size());
  const int nfft = next_power_of_two(n);
  std::vector<std::complex<double>> buf(nfft, {0.0, 0.0});
  for (int i = 0; i < n; ++i) buf[i] = x[i];
  fft_inplace(buf, false);
  // one-sided spectrum: keep DC and Nyquist, double positives, zero negatives
  for (int k = 1; k < nfft / 2; ++k) buf[k] *= 2.0;
  for (int k = nfft / 2 + 1; k < nfft; ++k) buf[k] = 0.0;
  fft_inplace(buf, true);
  std::vector<double> hilbert(n);
  for (int i = 0; i < n; ++i) hilbert[i] = buf[i].imag();
  return {x, std::move(hilbert)};
}

namespace {

// Centered windowed-sinc lowpass followed by keep-every-factor-th-sample.
std::vector<double> lowpass_decimate(const std::vector<double>& x, int factor,
                                     double cutoff, int taps) {
  const int half = taps / 2;
  std::vector<double> h(taps);
  double sum = 0.0;
  for (int i = 0; i < taps; ++i) {
    const double t = i - half;
    double v = (t == 0.0) ? 2.0 * cutoff : std::sin(2.0 * kPi * cutoff * t) / (kPi * t);
    v *= 0.54 - 0.46 * std::cos(2.0 * kPi * i / (taps - 1));
    h[i] = v;
    sum += v;
  }
  for (double& v : h) v /= sum;

  const std::size_t n_out = (x.size() + factor - 1) / factor;
  std::vector<double> y(n_out, 0.0);
  const long n = static_cast<long>(x.size());
  for (std::size_t m = 0; m < n_out; ++m) {
    const long center = static_cast<long>(m) * factor;
    double acc = 0.0;
    const long i0 = std::max(0L, half - center);
    const long i1 = std::min<long>(taps, half - center + n);
    for (long i = i0; i < i1; ++i) acc += h[i] * x[center - half + i];
    y[m] = acc;
  }
  return y;
}

}  // namespace

CqtSpectrogram cqt(const Waveform& w, double f_min, double f_max,
                   int bins_per_octave, double hop_ms, double align_ms) {
  const int fs = w.sample_rate_hz;
  if (fs <= 0) throw std::invalid_argument("cqt: sample rate must be positive");
  if (!(f_min > 0.0) || !(f_min < f_max) || f_max > fs / 2.0)
    throw std::invalid_argument("cqt: need 0 < f_min < f_max <= fs/2");
  if (bins_per_octave < 1) throw std::invalid_argument("cqt: bins_per_octave must be >= 1");
  if (!(hop_ms > 0.0) || !(align_ms > 0.0)) throw std::invalid_argument("cqt: bad hop or alignment");

  const int hop = static_cast<int>(std::lround(hop_ms / 1000.0 * fs));
  const int flen = static_cast<int>(std::lround(align_ms / 1000.0 * fs));
  if (hop < 1 || flen < 1) throw std::invalid_argument("cqt: hop shorter than one sample");
  const long n_samples = static_cast<long>(w.samples.size());
  if (n_samples < flen) throw std::invalid_argument("cqt: signal shorter than one frame");

  const int b = bins_per_octave;
  const int n_bins = static_cast<int>(std::floor(b * std::log2(f_max / f_min) + 1e-9));
  if (n_bins < 1) throw std::invalid_argument("cqt: band holds no bins");
  const double q = 1.0 / (std::exp2(1.0 / b) - 1.0);
  const std::size_t n_frames = 1 + static_cast<std::size_t>((n_samples - flen) / hop);

  CqtSpectrogram out;
  out.magnitude = Matrix(n_frames, n_bins);
  out.phase = Matrix(n_frames, n_bins);
  out.bins_per_octave = b;
  out.f_min_hz = f_min;
  out.hop_ms = hop_ms;
  out.sample_rate_hz = fs;

  // Long low-frequency windows are evaluated on decimated copies of the
  // signal. A factor is usable when it divides the hop (so frames stay
  // aligned) and is a product of 2s and 5s (so the chain is built from
  // halving and fifthing stages).
  auto usable = [hop](int d) {
    if (d < 1 || hop % d != 0) return false;
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    return d == 1;
  };
  std::map<int, std::vector<double>> stages;
  stages.emplace(1, w.samples);
  auto stage_signal = [&](int d, auto&& self) -> const std::vector<double>& {
    auto it = stages.find(d);
    if (it != stages.end()) return it->second;
    if (d % 2 == 0 && usable(d / 2)) {
      const auto& parent = self(d / 2, self);
      return stages.emplace(d, lowpass_decimate(parent, 2, 0.25, 79)).first->second;
    }
    const auto& parent = self(d / 5, self);
    return stages.emplace(d, lowpass_decimate(parent, 5, 0.08, 191)).first->second;
  };

  std::vector<double> kern_re, kern_im;
  for (int k = n_bins - 1; k >= 0; --k) {
    const double fk = f_min * std::exp2(static_cast<double>(k) / b);
    // top frequency of this bin's octave group decides the decimation
    const int oct = (n_bins - 1 - k) / b;
    const double f_top = f_min * std::exp2(static_cast<double>(n_bins - 1 - oct * b) / b);
    int decim = 1;
    for (int d = hop; d > 1; --d)
      if (usable(d) && f_top <= 0.44 * fs / d) {
        decim = d;
        break;
      }

    const auto& xs = stage_signal(decim, stage_signal);
    const double fs_d = static_cast<double>(fs) / decim;
    const int hop_d = hop / decim;
    const int len = std::max(2, static_cast<int>(std::ceil(q * fs_d / fk)));

    kern_re.assign(len, 0.0);
    kern_im.assign(len, 0.0);
    double wsum = 0.0;
    for (int t = 0; t < len; ++t) {
      const double wv = 0.5 * (1.0 - std::cos(2.0 * kPi * t / (len - 1)));
      const double ang = -2.0 * kPi * fk / fs_d * t;
      kern_re[t] = wv * std::cos(ang);
      kern_im[t] = wv * std::sin(ang);
      wsum += wv;
    }
    const double scale = 2.0 / wsum;

    const double center0 = 0.5 * flen / decim;  // frame-0 center, stage samples
    const long off0 = std::lround(center0 - 0.5 * (len - 1));
    const long stage_len = static_cast<long>(xs.size());
    for (std::size_t i = 0; i < n_frames; ++i) {
      const long start = static_cast<long>(i) * hop_d + off0;
      const long t0 = std::max(0L, -start);
      const long t1 = std::min<long>(len, stage_len - start);
      double re = 0.0, im = 0.0;
      const double* xp = xs.data() + start;
      for (long t = t0; t < t1; ++t) {
        re += kern_re[t] * xp[t];
        im += kern_im[t] * xp[t];
      }
      const double mag = std::sqrt(re * re + im * im) * scale;
      out.magnitude(i, k) = mag;
      out.phase(i, k) = (mag > 0.0) ? std::atan2(im, re) : 0.0;
    }
  }
  return out;
}

}  // namespace sigfeat
