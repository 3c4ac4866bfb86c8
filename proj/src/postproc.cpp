// src/postproc.cpp

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

#include "sigfeat/postproc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sigfeat/signal.hpp"

namespace sigfeat {

SadMask sad_mask(const Waveform& w, const SadConfig& cfg) {
  const FrameMatrix frames = frame_signal(w, cfg.frame_ms, cfg.shift_ms);
  const std::size_t n = frames.frames.rows();
  std::vector<double> log_energy(n);
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = 0.0;
    for (double s : frames.frames.row(i)) {
      const double v = s * 32768.0;
      e += v * v;
    }
    log_energy[i] = std::log(std::max(e, kLogFloor));
    mean += log_energy[i];
  }
  mean /= static_cast<double>(n);

  SadMask mask;
  mask.keep.resize(n);
  const double cut = cfg.threshold + cfg.mean_scale * mean;
  for (std::size_t i = 0; i < n; ++i) mask.keep[i] = log_energy[i] > cut;
  return mask;
}

FeatureMatrix apply_sad(const FeatureMatrix& f, const SadMask& mask) {
  if (mask.keep.size() != f.values.rows())
    throw std::invalid_argument("apply_sad: mask length must equal frame count");
  std::size_t kept = 0;
  for (bool k : mask.keep) kept += k;
  FeatureMatrix out;
  out.kind = f.kind;
  out.frame_shift_ms = f.frame_shift_ms;
  out.source_id = f.source_id;
  out.values = Matrix(kept, f.values.cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < f.values.rows(); ++i) {
    if (!mask.keep[i]) continue;
    const auto src = f.values.row(i);
    std::copy(src.begin(), src.end(), out.values.row(r++).data());
  }
  return out;
}

FeatureMatrix cmn(const FeatureMatrix& f, const std::vector<std::size_t>& exempt_dims) {
  if (f.values.rows() == 0) throw std::invalid_argument("cmn: empty feature matrix");
  std::vector<bool> exempt(f.values.cols(), false);
  for (std::size_t d : exempt_dims)
    if (d < exempt.size()) exempt[d] = true;

  std::vector<double> mean(f.values.cols(), 0.0);
  for (std::size_t i = 0; i < f.values.rows(); ++i) {
    const auto row = f.values.row(i);
    for (std::size_t c = 0; c < row.size(); ++c) mean[c] += row[c];
  }
  for (double& m : mean) m /= static_cast<double>(f.values.rows());

  FeatureMatrix out = f;
  for (std::size_t i = 0; i < out.values.rows(); ++i) {
    auto row = out.values.row(i);
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!exempt[c]) row[c] -= mean[c];
  }
  return out;
}

std::vector<std::size_t> cmn_exempt_dims(const FeatureMatrix& f) {
  if (f.kind != FeatureKind::kMfccPitch || f.values.cols() < 3) return {};
  const std::size_t d = f.values.cols();
  return {d - 3, d - 2, d - 1};
}

FeatureMatrix deltas(const FeatureMatrix& f, int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("deltas: order must be 1 or 2");
  constexpr int kWindow = 2;
  const long n = static_cast<long>(f.values.rows());
  if (n < 2 * kWindow + 1) throw std::invalid_argument("deltas: too few frames");

  auto regress = [n](const Matrix& src) {
    Matrix d(src.rows(), src.cols());
    for (long i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < src.cols(); ++c) {
        double acc = 0.0;
        for (long tau = 1; tau <= kWindow; ++tau) {
          const long lo = std::clamp(i - tau, 0L, n - 1);
          const long hi = std::clamp(i + tau, 0L, n - 1);
          acc += tau * (src(hi, c) - src(lo, c));
        }
        d(i, c) = acc / 10.0;  // 2 * (1^2 + 2^2)
      }
    }
    return d;
  };

  const Matrix d1 = regress(f.values);
  Matrix d2;
  if (order == 2) d2 = regress(d1);

  FeatureMatrix out;
  out.kind = f.kind;
  out.frame_shift_ms = f.frame_shift_ms;
  out.source_id = f.source_id;
  const std::size_t dim = f.values.cols();
  out.values = Matrix(f.values.rows(), dim * (order + 1));
  for (std::size_t i = 0; i < f.values.rows(); ++i) {
    auto dst = out.values.row(i);
    const auto s = f.values.row(i);
    std::copy(s.begin(), s.end(), dst.begin());
    const auto v1 = d1.row(i);
    std::copy(v1.begin(), v1.end(), dst.begin() + dim);
    if (order == 2) {
      const auto v2 = d2.row(i);
      std::copy(v2.begin(), v2.end(), dst.begin() + 2 * dim);
    }
  }
  return out;
}

FeatureMatrix append_pitch(const FeatureMatrix& f, const PitchTrack& p) {
  if (p.pov.size() != f.values.rows() || p.log_pitch.size() != f.values.rows() ||
      p.delta_pitch.size() != f.values.rows())
    throw std::invalid_argument("append_pitch: frame count mismatch");
  FeatureMatrix out;
  out.kind = FeatureKind::kMfccPitch;
  out.frame_shift_ms = f.frame_shift_ms;
  out.source_id = f.source_id;
  const std::size_t dim = f.values.cols();
  out.values = Matrix(f.values.rows(), dim + 3);
  for (std::size_t i = 0; i < f.values.rows(); ++i) {
    const auto src = f.values.row(i);
    auto dst = out.values.row(i);
    std::copy(src.begin(), src.end(), dst.begin());
    dst[dim] = p.pov[i];
    dst[dim + 1] = p.log_pitch[i];
    dst[dim + 2] = p.delta_pitch[i];
  }
  return out;
}

}  // namespace sigfeat
