// include/sigfeat/pitch.hpp

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

// NCCF-based pitch tracking producing the 3-dimensional vector (probability
// of voicing, log pitch, delta log pitch) appended to MFCCs.

#ifndef SIGFEAT_PITCH_HPP
#define SIGFEAT_PITCH_HPP

#include <span>

#include "sigfeat/types.hpp"

namespace sigfeat {

struct PitchTrack {
  std::vector<double> pov;          // in [0, 1]
  std::vector<double> log_pitch;    // ln Hz
  std::vector<double> delta_pitch;
};

struct PitchConfig {
  double min_f0_hz = 50.0;
  double max_f0_hz = 400.0;
  double frame_ms = 25.0;
  double shift_ms = 10.0;
  double octave_cost = 0.01;        // per octave of lag, discourages halving
  double voicing_threshold = 0.3;   // peak NCCF below this counts as unvoiced
  int median_window = 5;
  double unvoiced_default_hz = 100.0;  // used when nothing in the utterance is voiced
};

/// Normalized cross-correlation of a frame with itself at the given lag:
///   sum x(n) x(n+l) / sqrt(sum x(n)^2 * sum x(n+l)^2),
/// summed over the overlap, 0 when either energy vanishes. The value is
/// scale-free by construction and lies in [-1, 1]. Requires
/// 0 <= lag < frame length.
double nccf(std::span<const double> frame, int lag);

/// Per-frame best NCCF lag with an octave-cost penalty and parabolic lag
/// refinement; unvoiced stretches get log-pitch interpolated from their
/// voiced neighbors (never zeroed), the contour is median smoothed, and
/// delta pitch comes from a +-2 frame regression. Throws if the waveform
/// is shorter than one frame.
PitchTrack extract_pitch(const Waveform& w, const PitchConfig& cfg = {});

}  // namespace sigfeat

#endif  // SIGFEAT_PITCH_HPP
