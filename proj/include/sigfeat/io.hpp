// include/sigfeat/io.hpp

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

// File formats: 16-bit PCM mono WAV in, fmx (binary) and CSV feature files
// out. fmx layout: magic "FMX1", little-endian u32 n_frames, u32 dim,
// u32 feature-kind code, f32 frame_shift_ms, then row-major f32 data.

#ifndef SIGFEAT_IO_HPP
#define SIGFEAT_IO_HPP

#include <string>

#include "sigfeat/types.hpp"

namespace sigfeat {

/// Reads a 16-bit PCM mono WAV file; samples are scaled to [-1, 1]. Any
/// other encoding or channel count is an error naming the file. The sample
/// rate is returned as stored; callers decide what rates they accept.
Waveform read_wav(const std::string& path);

/// Writes 16-bit PCM mono; samples are clipped to [-1, 1].
void write_wav(const Waveform& w, const std::string& path);

void write_fmx(const FeatureMatrix& f, const std::string& path);

/// Reads an fmx file. Values are the stored f32s, so a write/read/write
/// cycle is byte-identical.
FeatureMatrix read_fmx(const std::string& path);

/// Comma-separated rows at 9 significant digits.
void write_csv(const FeatureMatrix& f, const std::string& path);

/// Reads a CSV feature file. The kind and frame shift are not stored in
/// CSV, so the caller's hints are used.
FeatureMatrix read_csv(const std::string& path, FeatureKind hint = FeatureKind::kMfcc,
                       double frame_shift_ms = 10.0);

}  // namespace sigfeat

#endif  // SIGFEAT_IO_HPP
