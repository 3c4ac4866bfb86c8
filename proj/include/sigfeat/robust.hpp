// include/sigfeat/robust.hpp

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

// Extractors built on long-term processing: mean Hilbert envelope
// coefficients and power-normalized cepstral coefficients.

#ifndef SIGFEAT_ROBUST_HPP
#define SIGFEAT_ROBUST_HPP

#include "sigfeat/signal.hpp"
#include "sigfeat/types.hpp"

namespace sigfeat {

/// Per-channel temporal envelopes, channels ordered by center frequency.
struct EnvelopeBank {
  Matrix envelopes;  // n_channels x n_samples
  std::vector<double> channel_center_freqs_hz;
};

/// Medium-time (multi-frame averaged) channel powers.
struct MediumTimePower {
  Matrix power;  // n_frames x n_channels
  int window_frames = 2;
};

struct MhecConfig {
  // 30 channels give the full 30-dimensional feature; a 20-channel bank is
  // a supported configuration whose output is capped at 20 coefficients.
  int n_channels = 30;
  int n_ceps = 30;
  double f_lo_hz = 100.0;
  double f_hi_hz = 7200.0;
  double envelope_lowpass_hz = 20.0;
  double frame_ms = 25.0;
  double shift_ms = 10.0;
  bool preemphasis = true;
  double preemphasis_coeff = 0.97;
};

struct PnccConfig {
  int n_channels = 40;
  int n_ceps = 30;
  int n_fft = 512;
  double f_lo_hz = 200.0;
  double f_hi_hz = 0.0;  // 0 means fs/2
  int medium_window_frames = 2;
  double lambda_rise = 0.999;  // noise floor creeps up slowly
  double lambda_fall = 0.5;    // and drops quickly
  double lambda_masking = 0.85;
  double mu_masking = 0.2;
  double lambda_mean_power = 0.999;
  int smoothing_halfwidth = 4;
  double power_exponent = 1.0 / 15.0;
  double frame_ms = 25.0;
  double shift_ms = 10.0;
  bool preemphasis = true;
  double preemphasis_coeff = 0.97;
};

/// Fourth-order gammatone filter (cascade of complex one-pole resonators)
/// with unit gain at the center frequency; returns the real output.
std::vector<double> gammatone_channel(const std::vector<double>& x, int fs, double fc);

/// Gammatone channel outputs turned into Hilbert envelopes
/// sqrt(s^2 + H{s}^2), one row per channel.
EnvelopeBank mhec_envelopes(const Waveform& w, const MhecConfig& cfg = {});

/// Mean Hilbert envelope coefficients: gammatone channels, Hilbert
/// envelope, 20 Hz lowpass, per-frame mean, log, DCT.
FeatureMatrix mhec(const Waveform& w, const MhecConfig& cfg = {});

/// Noise-floor tracker used by the PNCC chain: a first-order recursion
/// whose coefficient depends on whether the input sits above or below the
/// current estimate. Output starts at in[0].
std::vector<double> asymmetric_lowpass(const std::vector<double>& in,
                                       double lambda_rise, double lambda_fall);

/// Average of short-time powers over +-window_frames (clamped at edges).
MediumTimePower medium_time_power(const Matrix& short_time, int window_frames);

/// Power-normalized cepstral coefficients: gammatone power, medium-time
/// smoothing, asymmetric noise-floor subtraction with half-wave
/// rectification, temporal masking, spectral weight smoothing applied back
/// onto the short-time power, running mean power normalization, power-law
/// compression, DCT.
FeatureMatrix pncc(const Waveform& w, const PnccConfig& cfg = {});

}  // namespace sigfeat

#endif  // SIGFEAT_ROBUST_HPP
