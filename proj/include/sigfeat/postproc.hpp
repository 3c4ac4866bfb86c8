// include/sigfeat/postproc.hpp

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

// Post-processing: energy-based speech activity detection, utterance-level
// cepstral mean normalization, regression deltas and pitch appending.

#ifndef SIGFEAT_POSTPROC_HPP
#define SIGFEAT_POSTPROC_HPP

#include <vector>

#include "sigfeat/pitch.hpp"
#include "sigfeat/types.hpp"

namespace sigfeat {

struct SadMask {
  std::vector<bool> keep;
};

struct SadConfig {
  // Threshold on the log of raw frame energy, computed on samples scaled
  // to 16-bit range so the default matches the usual tooling convention.
  double threshold = 5.5;
  double mean_scale = 0.5;
  double frame_ms = 25.0;
  double shift_ms = 10.0;
};

/// A frame is kept iff log-energy > threshold + mean_scale * mean(log-energy).
/// Framing matches feature extraction, so the mask length equals the
/// feature row count. All-silence input yields an all-false mask.
SadMask sad_mask(const Waveform& w, const SadConfig& cfg = {});

/// Drops the rows whose mask entry is false. Mask length must equal the
/// feature row count.
FeatureMatrix apply_sad(const FeatureMatrix& f, const SadMask& mask);

/// Subtracts the utterance mean from every column not listed in
/// exempt_dims; exempt columns pass through untouched. Throws on an empty
/// matrix.
FeatureMatrix cmn(const FeatureMatrix& f,
                  const std::vector<std::size_t>& exempt_dims = {});

/// Columns that should survive cmn unchanged for this feature kind: the
/// three appended pitch dimensions, nothing otherwise.
std::vector<std::size_t> cmn_exempt_dims(const FeatureMatrix& f);

/// Regression deltas with a +-2 frame window and replicated edges. The
/// output concatenates [static | delta] (order 1) or
/// [static | delta | delta-delta] (order 2). Requires order in {1, 2} and
/// at least 5 frames.
FeatureMatrix deltas(const FeatureMatrix& f, int order);

/// Appends (pov, log pitch, delta pitch) as three extra columns. Frame
/// counts must match.
FeatureMatrix append_pitch(const FeatureMatrix& f, const PitchTrack& p);

}  // namespace sigfeat

#endif  // SIGFEAT_POSTPROC_HPP
