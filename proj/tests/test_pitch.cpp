// tests/test_pitch.cpp

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

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "sigfeat/pitch.hpp"

using namespace sigfeat;
using namespace sigfeat::testing;

namespace {

double median_pitch_hz(const PitchTrack& t) {
  std::vector<double> v = t.log_pitch;
  std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
  return std::exp(v[v.size() / 2]);
}

}  // namespace

TEST_CASE("nccf at the period of a periodic frame") {
  const Waveform w = tone(200.0, 0.025, 0.5);  // period 80 samples
  std::span<const double> frame(w.samples.data(), 400);
  CHECK(std::abs(nccf(frame, 80) - 1.0) < 1e-3);
  CHECK(std::abs(nccf(frame, 40) - (-1.0)) < 1e-3);  // anti-phase at half period
}

TEST_CASE("nccf on white noise is small and matches direct summation") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  std::vector<double> frame(400);
  for (double& v : frame) v = dist(rng);

  for (int lag : {40, 97, 200, 319}) {
    const double got = nccf(frame, lag);
    CHECK(std::abs(got) < 0.3);

    // direct re-evaluation of the definition
    double num = 0.0, e1 = 0.0, e2 = 0.0;
    for (std::size_t n = 0; n + lag < frame.size(); ++n) {
      num += frame[n] * frame[n + lag];
      e1 += frame[n] * frame[n];
      e2 += frame[n + lag] * frame[n + lag];
    }
    CHECK(got == doctest::Approx(num / std::sqrt(e1 * e2)).epsilon(1e-12));
  }
}

TEST_CASE("nccf bounds and degenerate input") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> frame(256);
  for (int rep = 0; rep < 50; ++rep) {
    for (double& v : frame) v = dist(rng);
    const int lag = 1 + static_cast<int>(rng() % 255);
    const double v = nccf(frame, lag);
    CHECK(std::abs(v) <= 1.0 + 1e-6);
  }
  const std::vector<double> zeros(128, 0.0);
  CHECK(nccf(zeros, 31) == 0.0);
  CHECK_THROWS_AS(nccf(zeros, 128), std::invalid_argument);
}

TEST_CASE("nccf and pitch are bit-identical under power-of-two gain") {
  const Waveform base = harmonic_tone(220.0, 5, 1.0);
  Waveform scaled = base;
  for (double& s : scaled.samples) s *= 4.0;  // exact in floating point

  std::span<const double> fa(base.samples.data(), 400);
  std::span<const double> fb(scaled.samples.data(), 400);
  for (int lag : {40, 72, 100, 319}) CHECK(nccf(fa, lag) == nccf(fb, lag));

  const PitchTrack ta = extract_pitch(base);
  const PitchTrack tb = extract_pitch(scaled);
  for (std::size_t i = 0; i < ta.pov.size(); ++i) {
    CHECK(ta.pov[i] == tb.pov[i]);
    CHECK(ta.log_pitch[i] == tb.log_pitch[i]);
    CHECK(ta.delta_pitch[i] == tb.delta_pitch[i]);
  }
}

TEST_CASE("pitch tracks harmonic tones within two percent") {
  for (double f0 : {120.0, 220.0, 330.0}) {
    const PitchTrack t = extract_pitch(harmonic_tone(f0, 5, 1.0));
    CHECK(std::abs(median_pitch_hz(t) - f0) / f0 < 0.02);
  }
}

TEST_CASE("white noise is mostly unvoiced") {
  const PitchTrack t = extract_pitch(white_noise(1.0, 321));
  double mean_pov = 0.0;
  for (double v : t.pov) mean_pov += v;
  mean_pov /= static_cast<double>(t.pov.size());
  CHECK(mean_pov < 0.5);
  for (double v : t.pov) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("log pitch preserves tone ordering") {
  const PitchTrack low = extract_pitch(tone(120.0, 1.0, 0.5));
  const PitchTrack high = extract_pitch(tone(330.0, 1.0, 0.5));
  CHECK(median_pitch_hz(low) < median_pitch_hz(high));
}

TEST_CASE("constant-pitch tone gives a constant interior contour") {
  // tile one exact 80-sample period so every frame holds bit-identical
  // data (200 Hz at a 160-sample shift)
  Waveform w;
  w.sample_rate_hz = 16000;
  std::vector<double> period(80);
  for (int t = 0; t < 80; ++t) period[t] = 0.5 * std::cos(2.0 * kTestPi * t / 80.0);
  for (int rep = 0; rep < 200; ++rep)
    w.samples.insert(w.samples.end(), period.begin(), period.end());
  const PitchTrack t = extract_pitch(w);
  for (std::size_t i = 3; i + 3 < t.log_pitch.size(); ++i)
    CHECK(t.log_pitch[i] == t.log_pitch[3]);
  for (std::size_t i = 3; i + 3 < t.delta_pitch.size(); ++i)
    CHECK(t.delta_pitch[i] == 0.0);
}

TEST_CASE("pitch extraction rejects too-short input") {
  CHECK_THROWS_AS(extract_pitch(silence(0.01)), std::invalid_argument);
}

TEST_CASE("silence produces a finite default track") {
  const PitchTrack t = extract_pitch(silence(0.5));
  for (std::size_t i = 0; i < t.pov.size(); ++i) {
    CHECK(t.pov[i] == 0.0);
    CHECK(std::isfinite(t.log_pitch[i]));
    CHECK(std::isfinite(t.delta_pitch[i]));
  }
}
