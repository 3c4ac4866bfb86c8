// include/sigfeat/signal.hpp

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

// Shared DSP substrate: framing, windows and tapers, spectral transforms,
// filterbanks, linear prediction, the analytic signal and the constant-Q
// transform. Everything here is a pure function of its arguments.

#ifndef SIGFEAT_SIGNAL_HPP
#define SIGFEAT_SIGNAL_HPP

#include <complex>
#include <utility>
#include <vector>

#include "sigfeat/types.hpp"

namespace sigfeat {

// Log compression floors its argument here to avoid -inf on silence.
inline constexpr double kLogFloor = 1e-10;

/// y[n] = x[n] - coeff * x[n-1], with y[0] = x[0]. Length is preserved.
std::vector<double> pre_emphasis(const std::vector<double>& x, double coeff);

/// Cuts a waveform into overlapping frames. Row i starts at sample
/// i * shift; a trailing partial frame is dropped. Throws if the waveform
/// is shorter than one frame.
FrameMatrix frame_signal(const Waveform& w, double frame_ms, double shift_ms);

/// Symmetric Hamming window, w[t] = 0.54 - 0.46 cos(2 pi t / (n-1)).
/// n == 1 degenerates to [1.0].
std::vector<double> hamming_window(int n);

/// Periodic Hann window of length n.
std::vector<double> hann_window(int n);

enum class TaperWeighting { kCosine, kUniform };

/// Orthonormal sine tapers w_j(t) = sqrt(2/(n+1)) sin(pi j (t+1)/(n+1)),
/// j = 1..k. The default weighting tapers off as cos^2(pi j / (2(k+1)));
/// kUniform gives every taper weight 1/k. Weights are normalized to sum
/// to one either way. Requires 1 <= k < n.
TaperSet sine_tapers(int n, int k, TaperWeighting weighting = TaperWeighting::kCosine);

/// In-place radix-2 FFT. Size must be a power of two. The forward
/// transform is unnormalized; the inverse divides by the size.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

/// Per-frame windowed, zero-padded, unnormalized DFT keeping bins
/// 0..n_fft/2. Requires n_fft to be a power of two and >= frame length.
ComplexSpectrogram dft_complex(const FrameMatrix& frames,
                               const std::vector<double>& window, int n_fft);

/// power[k] = re[k]^2 + im[k]^2.
PowerSpectrogram power_spectrum(const ComplexSpectrogram& spec);

/// Weighted sum of single-taper periodograms:
/// S(f) = sum_j weight(j) |sum_t w_j(t) x(t) e^(-i 2 pi t f / N)|^2.
/// Taper length must equal the frame length.
PowerSpectrogram multitaper_spectrum(const FrameMatrix& frames,
                                     const TaperSet& tapers, int n_fft);

/// Orthonormal DCT-II, first n_out coefficients. Requires
/// n_out <= x.size().
std::vector<double> dct2(const std::vector<double>& x, std::size_t n_out);

/// Inverse of dct2 at full length (the transform is orthonormal, so this
/// is the transpose).
std::vector<double> idct2(const std::vector<double>& x);

double hz_to_mel(double f);
double mel_to_hz(double m);
double hz_to_bark(double f);
double bark_to_hz(double b);
/// ERB-rate scale and equivalent rectangular bandwidth (Glasberg & Moore).
double hz_to_erb_rate(double f);
double erb_rate_to_hz(double e);
double erb_bandwidth_hz(double f);

/// Triangular filters with centers uniform on the warped scale, or (for
/// kGammatone) fourth-order gammatone magnitude responses sampled on the
/// FFT grid with centers uniform on the ERB-rate scale. Requires
/// 0 <= f_lo < f_hi <= fs/2 and n_filters >= 1.
FilterBank make_filterbank(FilterScale scale, int n_filters, int n_fft, int fs,
                           double f_lo, double f_hi);

/// Biased autocorrelation r[0..max_lag] of one frame.
std::vector<double> autocorrelation(std::span<const double> x, int max_lag);

/// Solves the Toeplitz normal equations for an order-p predictor.
/// residual_energy is the final prediction error, non-increasing across
/// the recursion. Throws if autocorr[0] <= 0 (silent frame; callers
/// normally substitute a zero cepstrum instead of calling).
LpModel levinson_durbin(const std::vector<double>& autocorr, int order);

/// LPC-to-cepstrum recursion. Returns n_ceps + 1 values c_0..c_n with
/// c_0 = ln(residual_energy) and
/// c_n = -a_n - (1/n) sum_{k=1}^{n-1} k c_k a_{n-k}.
/// Throws if residual_energy <= 0.
std::vector<double> lpc_to_cepstrum(const LpModel& lp, int n_ceps);

/// Returns (x, H{x}) where H is the discrete Hilbert transform computed in
/// the frequency domain (negative frequencies zeroed, positive doubled).
std::pair<std::vector<double>, std::vector<double>> analytic_signal(
    const std::vector<double>& x);

/// Constant-Q transform. Bin k is centered at f_min 2^(k/B) with a Hann
/// window spanning Q/f_k seconds, Q = 1/(2^(1/B) - 1); each output value
/// is the windowed inner product of the signal with the bin's complex
/// exponential, normalized so a unit tone at a bin center has magnitude
/// about one. Low octaves are evaluated on progressively decimated copies
/// of the signal so long analysis windows stay affordable; the hop and the
/// inner products are time-aligned across octaves.
///
/// Frames are centered at i * hop + align_ms/2 so row counts and frame
/// times line up with frame_signal(w, align_ms, hop_ms). Requires
/// f_min < f_max <= fs/2 and bins_per_octave >= 1.
CqtSpectrogram cqt(const Waveform& w, double f_min, double f_max,
                   int bins_per_octave, double hop_ms, double align_ms = 25.0);

}  // namespace sigfeat

#endif  // SIGFEAT_SIGNAL_HPP
