// tests/test_postproc.cpp

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

#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "sigfeat/postproc.hpp"
#include "sigfeat/spectral.hpp"

using namespace sigfeat;
using namespace sigfeat::testing;

namespace {

FeatureMatrix make_features(std::size_t rows, std::size_t cols) {
  FeatureMatrix f;
  f.values = Matrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c)
      f.values(i, c) = std::sin(0.1 * i) + 0.01 * static_cast<double>(c) * i;
  return f;
}

}  // namespace

TEST_CASE("sad drops silence and keeps loud frames") {
  const SadMask none = sad_mask(silence(1.0));
  for (bool k : none.keep) CHECK_FALSE(k);

  const SadMask all = sad_mask(tone(440.0, 1.0, 1.0));
  CHECK(all.keep.size() == frame_signal(tone(440.0, 1.0, 1.0), 25.0, 10.0).frames.rows());
  for (bool k : all.keep) CHECK(k);
}

TEST_CASE("sad mask follows tone bursts") {
  // 0.5 s tone, 0.4 s silence, 0.5 s tone
  Waveform w;
  w.sample_rate_hz = 16000;
  w.samples.resize(static_cast<std::size_t>(1.4 * 16000), 0.0);
  auto put_tone = [&w](double start_s, double len_s) {
    const std::size_t a = static_cast<std::size_t>(start_s * 16000);
    const std::size_t b = a + static_cast<std::size_t>(len_s * 16000);
    for (std::size_t t = a; t < b; ++t)
      w.samples[t] = 0.6 * std::sin(2.0 * kTestPi * 500.0 * (t - a) / 16000.0);
  };
  put_tone(0.0, 0.5);
  put_tone(0.9, 0.5);

  const SadMask mask = sad_mask(w);
  for (std::size_t i = 0; i < mask.keep.size(); ++i) {
    const double frame_start = i * 0.010;
    const double frame_end = frame_start + 0.025;
    const bool fully_tone = (frame_end <= 0.5) || (frame_start >= 0.9 && frame_end <= 1.4);
    const bool fully_silent = frame_start >= 0.5 && frame_end <= 0.9;
    if (fully_tone) CHECK(mask.keep[i]);
    if (fully_silent) CHECK_FALSE(mask.keep[i]);
  }
}

TEST_CASE("apply_sad keeps exactly the flagged rows") {
  FeatureMatrix f = make_features(6, 3);
  SadMask mask;
  mask.keep = {true, false, true, true, false, true};
  const FeatureMatrix out = apply_sad(f, mask);
  CHECK(out.values.rows() == 4);
  CHECK(out.values(1, 0) == f.values(2, 0));

  mask.keep.resize(5);
  CHECK_THROWS_AS(apply_sad(f, mask), std::invalid_argument);
}

TEST_CASE("cmn zeroes column means and spares exempt dims") {
  FeatureMatrix f = make_features(50, 33);
  const FeatureMatrix out = cmn(f, {30, 31, 32});
  for (std::size_t c = 0; c < 30; ++c) {
    double mean = 0.0;
    for (std::size_t i = 0; i < out.values.rows(); ++i) mean += out.values(i, c);
    mean /= static_cast<double>(out.values.rows());
    CHECK(std::abs(mean) < 1e-9);
  }
  for (std::size_t c = 30; c < 33; ++c)
    for (std::size_t i = 0; i < out.values.rows(); ++i)
      CHECK(out.values(i, c) == f.values(i, c));

  // constant matrix maps to zero (3.5 sums exactly in binary)
  FeatureMatrix constant;
  constant.values = Matrix(10, 4, 3.5);
  const FeatureMatrix centered = cmn(constant);
  for (double v : centered.values.data()) CHECK(v == 0.0);

  // idempotence
  const FeatureMatrix once = cmn(f);
  const FeatureMatrix twice = cmn(once);
  for (std::size_t i = 0; i < once.values.rows(); ++i)
    for (std::size_t c = 0; c < once.values.cols(); ++c)
      CHECK(std::abs(once.values(i, c) - twice.values(i, c)) < 1e-12);

  FeatureMatrix empty;
  CHECK_THROWS_AS(cmn(empty), std::invalid_argument);
}

TEST_CASE("cmn_exempt_dims flags only appended pitch") {
  FeatureMatrix f = make_features(5, 33);
  CHECK(cmn_exempt_dims(f).empty());
  f.kind = FeatureKind::kMfccPitch;
  CHECK(cmn_exempt_dims(f) == std::vector<std::size_t>{30, 31, 32});
}

TEST_CASE("deltas of constants and ramps") {
  FeatureMatrix constant;
  constant.values = Matrix(10, 2, 1.5);
  const FeatureMatrix d = deltas(constant, 1);
  CHECK(d.values.cols() == 4);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(d.values(i, 2) == 0.0);
    CHECK(d.values(i, 3) == 0.0);
  }

  FeatureMatrix ramp;
  ramp.values = Matrix(20, 1);
  for (std::size_t i = 0; i < 20; ++i) ramp.values(i, 0) = 0.25 * static_cast<double>(i);
  const FeatureMatrix dr = deltas(ramp, 2);
  CHECK(dr.values.cols() == 3);
  for (std::size_t i = 2; i + 2 < 20; ++i)
    CHECK(dr.values(i, 1) == doctest::Approx(0.25).epsilon(1e-12));
  // the second difference flattens once the first-pass edge frames are out
  // of the regression window
  for (std::size_t i = 4; i + 4 < 20; ++i)
    CHECK(std::abs(dr.values(i, 2)) < 1e-12);
}

TEST_CASE("delta dimensions follow the spec table") {
  FeatureMatrix f = make_features(30, 30);
  CHECK(deltas(f, 1).values.cols() == 60);
  CHECK(deltas(f, 2).values.cols() == 90);
  CHECK_THROWS_AS(deltas(f, 3), std::invalid_argument);

  FeatureMatrix tiny = make_features(4, 30);
  CHECK_THROWS_AS(deltas(tiny, 1), std::invalid_argument);
}

TEST_CASE("time-reversed deltas negate") {
  FeatureMatrix f = make_features(25, 3);
  const FeatureMatrix d = deltas(f, 1);

  FeatureMatrix rev;
  rev.values = Matrix(25, 3);
  for (std::size_t i = 0; i < 25; ++i)
    for (std::size_t c = 0; c < 3; ++c) rev.values(i, c) = f.values(24 - i, c);
  const FeatureMatrix dr = deltas(rev, 1);
  for (std::size_t i = 2; i + 2 < 25; ++i)
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(dr.values(i, c + 3) == doctest::Approx(-d.values(24 - i, c + 3)).epsilon(1e-12));
}

TEST_CASE("append_pitch widens by three and keeps the static part") {
  FeatureMatrix f = make_features(12, 30);
  PitchTrack p;
  p.pov.assign(12, 0.5);
  p.log_pitch.assign(12, std::log(150.0));
  p.delta_pitch.assign(12, 0.01);
  const FeatureMatrix out = append_pitch(f, p);
  CHECK(out.values.cols() == 33);
  CHECK(out.kind == FeatureKind::kMfccPitch);
  for (std::size_t i = 0; i < 12; ++i) {
    for (std::size_t c = 0; c < 30; ++c) CHECK(out.values(i, c) == f.values(i, c));
    CHECK(out.values(i, 30) == 0.5);
  }

  p.pov.resize(11);
  CHECK_THROWS_AS(append_pitch(f, p), std::invalid_argument);
}
