// include/sigfeat/spectral.hpp

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

// Magnitude-spectrum cepstral extractors: MFCC, multi-taper MFCC, LPCC,
// PLPCC, spectral subband centroids (SCFC/SCMC) and CQCC.

#ifndef SIGFEAT_SPECTRAL_HPP
#define SIGFEAT_SPECTRAL_HPP

#include "sigfeat/signal.hpp"
#include "sigfeat/types.hpp"

namespace sigfeat {

/// Settings shared by the STFT-based cepstral extractors. Defaults give
/// 30-dimensional features from a 512-point FFT at 25 ms / 10 ms framing.
struct CepstralConfig {
  int n_filters = 30;
  int n_ceps = 30;
  int n_fft = 512;
  int lp_order = 30;
  double frame_ms = 25.0;
  double shift_ms = 10.0;
  bool preemphasis = true;
  double preemphasis_coeff = 0.97;
  double f_lo_hz = 20.0;
  double f_hi_hz = 0.0;  // 0 means fs/2
};

struct CqccConfig {
  int bins_per_octave = 96;
  int n_octaves = 9;        // f_min = (fs/2) / 2^n_octaves
  int resample_points = 512;
  int n_ceps = 60;
  double hop_ms = 10.0;
  double align_ms = 25.0;
};

/// Band energies: out(i, m) = sum_k bank(m, k) * power(i, k).
Matrix apply_filterbank(const PowerSpectrogram& spec, const FilterBank& bank);

/// Equal-loudness weight applied to band powers in the PLP front half.
double plp_equal_loudness(double f_hz);

/// ln(max(x, 1e-10)) per element, then orthonormal DCT-II per row keeping
/// n_ceps coefficients (c0 first).
Matrix log_dct(const Matrix& energies, std::size_t n_ceps);

/// STFT power -> mel filterbank -> log -> DCT. c0 is kept as the first of
/// the n_ceps coefficients.
FeatureMatrix mfcc(const Waveform& w, const CepstralConfig& cfg = {});

/// Same back half as mfcc, but the power spectrum is a weighted sine-taper
/// estimate instead of a single Hamming periodogram.
FeatureMatrix multitaper_mfcc(const Waveform& w, const CepstralConfig& cfg = {},
                              int n_tapers = 8,
                              TaperWeighting weighting = TaperWeighting::kCosine);

/// Linear-prediction cepstra c_1..c_n (c0 excluded). Silent frames yield
/// zero rows.
FeatureMatrix lpcc(const Waveform& w, const CepstralConfig& cfg = {});

/// Perceptual LP cepstra: bark filterbank, equal-loudness weighting, cube
/// root compression, then LP analysis of the implied autocorrelation.
FeatureMatrix plpcc(const Waveform& w, const CepstralConfig& cfg = {});

/// Subband centroid frequencies in Hz, used directly (no log, no DCT). A
/// subband with no energy falls back to its geometric center frequency.
FeatureMatrix scfc(const Waveform& w, const CepstralConfig& cfg = {});

/// Subband centroid magnitudes: frequency-weighted band power, then
/// log + DCT.
FeatureMatrix scmc(const Waveform& w, const CepstralConfig& cfg = {});

/// Constant-Q cepstra: |CQT|^2, log, resampled onto a uniform frequency
/// grid (linear interpolation along the log-frequency bin axis), DCT.
FeatureMatrix cqcc(const Waveform& w, const CqccConfig& cfg = {});

}  // namespace sigfeat

#endif  // SIGFEAT_SPECTRAL_HPP
