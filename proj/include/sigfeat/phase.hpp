// include/sigfeat/phase.hpp

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

// Short-term phase extractors: modified group delay, all-pole group delay,
// cosine phase and constant-Q magnitude-phase octave coefficients.

#ifndef SIGFEAT_PHASE_HPP
#define SIGFEAT_PHASE_HPP

#include <span>

#include "sigfeat/signal.hpp"
#include "sigfeat/spectral.hpp"
#include "sigfeat/types.hpp"

namespace sigfeat {

struct MgdfConfig {
  double alpha = 0.4;
  double gamma = 0.9;
  int smoothing = 30;  // quefrency bins kept when smoothing |X|; 0 keeps S = |X|
  int n_ceps = 30;
  int n_fft = 512;
  double frame_ms = 25.0;
  double shift_ms = 10.0;
  bool preemphasis = true;
  double preemphasis_coeff = 0.97;
};

struct CmpocConfig {
  int bins_per_octave = 96;
  int n_octaves = 9;
  int n_ceps = 30;
  double hop_ms = 10.0;
  double align_ms = 25.0;
};

/// Modified group delay of one (already windowed) frame on bins
/// 0..n_fft/2:
///   tau(k) = sign(num) |num / S(k)^(2 gamma)|^alpha,
///   num    = X_R Y_R + X_I Y_I,
/// with X the DFT of the frame, Y the DFT of t*x(t), and S the cepstrally
/// smoothed |X| (or |X| itself when cfg.smoothing == 0). With
/// alpha = gamma = 1 and no smoothing this is the classical group delay.
std::vector<double> mgdf_tau(std::span<const double> frame, const MgdfConfig& cfg);

/// Group delay of the all-pole spectrum 1/A(e^jw) on bins 0..n_fft/2,
/// evaluated from the coefficient sequence [1, a_1..a_p].
std::vector<double> allpole_group_delay(const LpModel& lp, int n_fft);

/// Frequency-unwrapped DFT phase of one spectrum row. Bins with magnitude
/// below 1e-10 inherit the previous bin's unwrapped phase.
std::vector<double> unwrap_phase(std::span<const double> real_part,
                                 std::span<const double> imag_part);

/// sqrt(ln|X|^2 + phase^2) per bin, with ln|X| floored at ln(1e-10).
std::vector<double> magnitude_phase_spectrum(std::span<const double> magnitude,
                                             std::span<const double> phase);

/// Modified group delay features: tau per frame, then DCT, first n_ceps.
FeatureMatrix mgdf(const Waveform& w, const MgdfConfig& cfg = {});

/// All-pole group delay features: per-frame LP model, analytic group delay
/// of 1/A, DCT. Silent frames yield zero rows.
FeatureMatrix apgdf(const Waveform& w, const CepstralConfig& cfg = {});

/// cos(unwrapped phase) per bin, then DCT.
FeatureMatrix cosphase(const Waveform& w, const CepstralConfig& cfg = {});

/// Constant-Q magnitude-phase octave coefficients: the magnitude-phase
/// spectrum is log-compressed and DCT'd octave by octave (lowest octave
/// first), the concatenation truncated to n_ceps.
FeatureMatrix cmpoc(const Waveform& w, const CmpocConfig& cfg = {});

}  // namespace sigfeat

#endif  // SIGFEAT_PHASE_HPP
