// src/pitch.cpp

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

#include "sigfeat/pitch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sigfeat/signal.hpp"

namespace sigfeat {

double nccf(std::span<const double> frame, int lag) {
  if (lag < 0 || static_cast<std::size_t>(lag) >= frame.size())
    throw std::invalid_argument("nccf: lag must satisfy 0 <= lag < frame length");
  const std::size_t n = frame.size() - lag;
  double num = 0.0, e1 = 0.0, e2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += frame[i] * frame[i + lag];
    e1 += frame[i] * frame[i];
    e2 += frame[i + lag] * frame[i + lag];
  }
  const double den2 = e1 * e2;
  if (den2 == 0.0) return 0.0;
  return num / std::sqrt(den2);
}

namespace {

std::vector<double> median_smooth(const std::vector<double>& x, int window) {
  if (window <= 1 || x.size() < 2) return x;
  const int half = window / 2;
  const long n = static_cast<long>(x.size());
  std::vector<double> out(x.size());
  std::vector<double> buf;
  for (long i = 0; i < n; ++i) {
    const long lo = std::max(0L, i - half);
    const long hi = std::min(n - 1, i + half);
    buf.assign(x.begin() + lo, x.begin() + hi + 1);
    std::nth_element(buf.begin(), buf.begin() + buf.size() / 2, buf.end());
    double med = buf[buf.size() / 2];
    if (buf.size() % 2 == 0) {
      const double upper = med;
      std::nth_element(buf.begin(), buf.begin() + buf.size() / 2 - 1, buf.end());
      med = 0.5 * (buf[buf.size() / 2 - 1] + upper);
    }
    out[i] = med;
  }
  return out;
}

}  // namespace

PitchTrack extract_pitch(const Waveform& w, const PitchConfig& cfg) {
  if (!(cfg.min_f0_hz > 0.0) || !(cfg.min_f0_hz < cfg.max_f0_hz))
    throw std::invalid_argument("extract_pitch: need 0 < min_f0 < max_f0");
  const FrameMatrix frames = frame_signal(w, cfg.frame_ms, cfg.shift_ms);
  const int fs = w.sample_rate_hz;
  const int min_lag = std::max(1, static_cast<int>(std::ceil(fs / cfg.max_f0_hz)));
  const int max_lag =
      std::min(frames.frame_len_samples - 1, static_cast<int>(std::floor(fs / cfg.min_f0_hz)));
  if (min_lag > max_lag) throw std::invalid_argument("extract_pitch: lag range is empty");

  const std::size_t n_frames = frames.frames.rows();
  std::vector<double> pitch_hz(n_frames);
  std::vector<double> peak_nccf(n_frames);
  std::vector<bool> voiced(n_frames);

  std::vector<double> corr(max_lag - min_lag + 1);
  for (std::size_t i = 0; i < n_frames; ++i) {
    const auto frame = frames.frames.row(i);
    int best = min_lag;
    double best_score = -2.0;
    for (int lag = min_lag; lag <= max_lag; ++lag) {
      const double v = nccf(frame, lag);
      corr[lag - min_lag] = v;
      const double score =
          v - cfg.octave_cost * std::log2(static_cast<double>(lag) / min_lag);
      if (score > best_score) {
        best_score = score;
        best = lag;
      }
    }
    peak_nccf[i] = corr[best - min_lag];
    voiced[i] = peak_nccf[i] > cfg.voicing_threshold;

    // parabolic refinement around the winning lag
    double refined = best;
    if (best > min_lag && best < max_lag) {
      const double ym = corr[best - 1 - min_lag];
      const double y0 = corr[best - min_lag];
      const double yp = corr[best + 1 - min_lag];
      const double denom = ym - 2.0 * y0 + yp;
      if (denom != 0.0 && std::isfinite(denom)) {
        const double delta = 0.5 * (ym - yp) / denom;
        if (std::abs(delta) <= 0.5) refined += delta;
      }
    }
    pitch_hz[i] = fs / refined;
  }

  // continuous contour: unvoiced frames borrow from voiced neighbors
  std::vector<long> voiced_idx;
  for (std::size_t i = 0; i < n_frames; ++i)
    if (voiced[i]) voiced_idx.push_back(static_cast<long>(i));
  std::vector<double> contour(n_frames);
  if (voiced_idx.empty()) {
    std::fill(contour.begin(), contour.end(), cfg.unvoiced_default_hz);
  } else {
    for (std::size_t i = 0; i < n_frames; ++i) {
      if (voiced[i]) {
        contour[i] = pitch_hz[i];
        continue;
      }
      const auto right =
          std::lower_bound(voiced_idx.begin(), voiced_idx.end(), static_cast<long>(i));
      if (right == voiced_idx.begin()) {
        contour[i] = pitch_hz[voiced_idx.front()];
      } else if (right == voiced_idx.end()) {
        contour[i] = pitch_hz[voiced_idx.back()];
      } else {
        const long hi = *right, lo = *(right - 1);
        const double t = static_cast<double>(i - lo) / (hi - lo);
        contour[i] = std::exp((1.0 - t) * std::log(pitch_hz[lo]) +
                              t * std::log(pitch_hz[hi]));
      }
    }
  }
  contour = median_smooth(contour, cfg.median_window);

  PitchTrack track;
  track.pov.resize(n_frames);
  track.log_pitch.resize(n_frames);
  track.delta_pitch.resize(n_frames);
  for (std::size_t i = 0; i < n_frames; ++i) {
    track.pov[i] = std::clamp(peak_nccf[i], 0.0, 1.0);
    track.log_pitch[i] = std::log(contour[i]);
  }
  // +-2 frame regression with replicated edges
  const long n = static_cast<long>(n_frames);
  auto at = [&](long i) { return track.log_pitch[std::clamp(i, 0L, n - 1)]; };
  for (long i = 0; i < n; ++i) {
    double acc = 0.0;
    for (long tau = 1; tau <= 2; ++tau) acc += tau * (at(i + tau) - at(i - tau));
    track.delta_pitch[i] = acc / 10.0;  // 2 * (1^2 + 2^2)
  }
  return track;
}

}  // namespace sigfeat
