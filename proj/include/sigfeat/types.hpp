// include/sigfeat/types.hpp

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

#ifndef SIGFEAT_TYPES_HPP
#define SIGFEAT_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sigfeat {

/// Dense row-major matrix of doubles. The one container every stage of the
/// pipeline passes around; deliberately minimal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Mono sampled audio. Samples are dimensionless, nominally in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate_hz = 16000;
};

/// Frames cut from a waveform: one row per frame, no padding (a trailing
/// partial frame is dropped).
struct FrameMatrix {
  Matrix frames;
  int frame_len_samples = 0;
  int frame_shift_samples = 0;
  int sample_rate_hz = 0;
};

/// A bank of window functions plus their combination weights. Rows are
/// tapers of equal length; weights are nonnegative and sum to one.
struct TaperSet {
  Matrix tapers;                 // K x N
  std::vector<double> weights;   // K, sums to 1
};

/// Per-frame DFT split into real and imaginary parts; bins 0..n_fft/2.
struct ComplexSpectrogram {
  Matrix real_part;
  Matrix imag_part;
  int n_fft = 0;
  int sample_rate_hz = 0;
};

/// Nonnegative per-frame power bins.
struct PowerSpectrogram {
  Matrix power;
  int n_fft = 0;
  int sample_rate_hz = 0;
};

enum class FilterScale { kMel, kBark, kLinear, kGammatone };

/// Weights mapping FFT bins to band energies, one row per band.
struct FilterBank {
  Matrix weights;                       // n_filters x n_bins
  FilterScale scale = FilterScale::kMel;
  std::vector<double> center_freqs_hz;  // strictly increasing
};

/// All-pole model in the convention A(z) = 1 + sum_i a_i z^-i. `coeffs`
/// holds a_1..a_p; the leading 1 is implicit.
struct LpModel {
  int order = 0;
  std::vector<double> coeffs;
  double residual_energy = 0.0;
};

/// Constant-Q spectrogram: geometrically spaced bins, magnitude plus phase
/// wrapped to (-pi, pi]. Bin k is centered at f_min * 2^(k/B).
struct CqtSpectrogram {
  Matrix magnitude;
  Matrix phase;
  int bins_per_octave = 0;
  double f_min_hz = 0.0;
  double hop_ms = 0.0;
  int sample_rate_hz = 0;
};

/// The 14 extractor outputs plus the pitch-appended MFCC variant.
enum class FeatureKind : std::uint32_t {
  kMfcc = 1,
  kMultitaperMfcc = 2,
  kLpcc = 3,
  kPlpcc = 4,
  kScfc = 5,
  kScmc = 6,
  kCqcc = 7,
  kMgdf = 8,
  kApgdf = 9,
  kCosphase = 10,
  kCmpoc = 11,
  kMhec = 12,
  kPncc = 13,
  kMfccPitch = 14,
};

/// Canonical lowercase name used by the CLI and in output file names.
std::string feature_kind_name(FeatureKind kind);

/// Inverse of feature_kind_name. Accepts "mfcc+pitch" as an alias for
/// "mfcc_pitch". Throws std::invalid_argument on unknown names.
FeatureKind feature_kind_from_name(const std::string& name);

/// All kinds in their stable numeric order.
std::span<const FeatureKind> all_feature_kinds();

/// Frames-by-dimension feature output, tagged with its kind and frame rate.
struct FeatureMatrix {
  Matrix values;
  FeatureKind kind = FeatureKind::kMfcc;
  double frame_shift_ms = 10.0;
  std::string source_id;
};

}  // namespace sigfeat

#endif  // SIGFEAT_TYPES_HPP
