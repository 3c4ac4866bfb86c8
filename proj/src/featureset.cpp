// src/featureset.cpp

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

#include "sigfeat/featureset.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>

namespace sigfeat {

namespace {

double parse_double(const std::string& v) {
  std::size_t pos = 0;
  const double d = std::stod(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("trailing characters in value '" + v + "'");
  return d;
}

int parse_int(const std::string& v) {
  std::size_t pos = 0;
  const int i = std::stoi(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("trailing characters in value '" + v + "'");
  return i;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw std::invalid_argument("expected a boolean, got '" + v + "'");
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

using Setter = std::function<void(FrontendConfig&, const std::string&)>;

const std::map<std::string, Setter>& key_table() {
  static const std::map<std::string, Setter> table = {
      // framing and pre-emphasis apply to every extractor
      {"frame.length_ms",
       [](FrontendConfig& c, const std::string& v) {
         const double ms = parse_double(v);
         c.cepstral.frame_ms = c.mgdf.frame_ms = c.mhec.frame_ms = c.pncc.frame_ms =
             c.pitch.frame_ms = c.sad.frame_ms = ms;
         c.cqcc.align_ms = c.cmpoc.align_ms = ms;
       }},
      {"frame.shift_ms",
       [](FrontendConfig& c, const std::string& v) {
         const double ms = parse_double(v);
         c.cepstral.shift_ms = c.mgdf.shift_ms = c.mhec.shift_ms = c.pncc.shift_ms =
             c.pitch.shift_ms = c.sad.shift_ms = ms;
         c.cqcc.hop_ms = c.cmpoc.hop_ms = ms;
       }},
      {"preemphasis.enabled",
       [](FrontendConfig& c, const std::string& v) {
         const bool on = parse_bool(v);
         c.cepstral.preemphasis = c.mgdf.preemphasis = c.mhec.preemphasis =
             c.pncc.preemphasis = on;
       }},
      {"preemphasis.coeff",
       [](FrontendConfig& c, const std::string& v) {
         const double coeff = parse_double(v);
         c.cepstral.preemphasis_coeff = c.mgdf.preemphasis_coeff =
             c.mhec.preemphasis_coeff = c.pncc.preemphasis_coeff = coeff;
       }},
      {"cepstral.n_filters",
       [](FrontendConfig& c, const std::string& v) { c.cepstral.n_filters = parse_int(v); }},
      {"cepstral.n_ceps",
       [](FrontendConfig& c, const std::string& v) { c.cepstral.n_ceps = parse_int(v); }},
      {"cepstral.n_fft",
       [](FrontendConfig& c, const std::string& v) { c.cepstral.n_fft = parse_int(v); }},
      {"cepstral.f_lo_hz",
       [](FrontendConfig& c, const std::string& v) { c.cepstral.f_lo_hz = parse_double(v); }},
      {"cepstral.f_hi_hz",
       [](FrontendConfig& c, const std::string& v) { c.cepstral.f_hi_hz = parse_double(v); }},
      {"lpcc.order",
       [](FrontendConfig& c, const std::string& v) { c.lpcc_order = parse_int(v); }},
      {"plpcc.order",
       [](FrontendConfig& c, const std::string& v) { c.plpcc_order = parse_int(v); }},
      {"apgdf.order",
       [](FrontendConfig& c, const std::string& v) { c.apgdf_order = parse_int(v); }},
      {"multitaper.n_tapers",
       [](FrontendConfig& c, const std::string& v) { c.multitaper_tapers = parse_int(v); }},
      {"multitaper.uniform_weights",
       [](FrontendConfig& c, const std::string& v) {
         c.multitaper_uniform_weights = parse_bool(v);
       }},
      {"mgdf.alpha",
       [](FrontendConfig& c, const std::string& v) { c.mgdf.alpha = parse_double(v); }},
      {"mgdf.gamma",
       [](FrontendConfig& c, const std::string& v) { c.mgdf.gamma = parse_double(v); }},
      {"mgdf.smoothing",
       [](FrontendConfig& c, const std::string& v) { c.mgdf.smoothing = parse_int(v); }},
      {"mgdf.n_ceps",
       [](FrontendConfig& c, const std::string& v) { c.mgdf.n_ceps = parse_int(v); }},
      {"mgdf.n_fft",
       [](FrontendConfig& c, const std::string& v) { c.mgdf.n_fft = parse_int(v); }},
      {"cqcc.bins_per_octave",
       [](FrontendConfig& c, const std::string& v) { c.cqcc.bins_per_octave = parse_int(v); }},
      {"cqcc.n_octaves",
       [](FrontendConfig& c, const std::string& v) { c.cqcc.n_octaves = parse_int(v); }},
      {"cqcc.resample_points",
       [](FrontendConfig& c, const std::string& v) { c.cqcc.resample_points = parse_int(v); }},
      {"cqcc.n_ceps",
       [](FrontendConfig& c, const std::string& v) { c.cqcc.n_ceps = parse_int(v); }},
      {"cmpoc.bins_per_octave",
       [](FrontendConfig& c, const std::string& v) { c.cmpoc.bins_per_octave = parse_int(v); }},
      {"cmpoc.n_octaves",
       [](FrontendConfig& c, const std::string& v) { c.cmpoc.n_octaves = parse_int(v); }},
      {"cmpoc.n_ceps",
       [](FrontendConfig& c, const std::string& v) { c.cmpoc.n_ceps = parse_int(v); }},
      {"mhec.n_channels",
       [](FrontendConfig& c, const std::string& v) { c.mhec.n_channels = parse_int(v); }},
      {"mhec.n_ceps",
       [](FrontendConfig& c, const std::string& v) { c.mhec.n_ceps = parse_int(v); }},
      {"mhec.f_lo_hz",
       [](FrontendConfig& c, const std::string& v) { c.mhec.f_lo_hz = parse_double(v); }},
      {"mhec.f_hi_hz",
       [](FrontendConfig& c, const std::string& v) { c.mhec.f_hi_hz = parse_double(v); }},
      {"mhec.lowpass_hz",
       [](FrontendConfig& c, const std::string& v) {
         c.mhec.envelope_lowpass_hz = parse_double(v);
       }},
      {"pncc.n_channels",
       [](FrontendConfig& c, const std::string& v) { c.pncc.n_channels = parse_int(v); }},
      {"pncc.n_ceps",
       [](FrontendConfig& c, const std::string& v) { c.pncc.n_ceps = parse_int(v); }},
      {"pncc.n_fft",
       [](FrontendConfig& c, const std::string& v) { c.pncc.n_fft = parse_int(v); }},
      {"pncc.f_lo_hz",
       [](FrontendConfig& c, const std::string& v) { c.pncc.f_lo_hz = parse_double(v); }},
      {"pncc.f_hi_hz",
       [](FrontendConfig& c, const std::string& v) { c.pncc.f_hi_hz = parse_double(v); }},
      {"pitch.min_f0",
       [](FrontendConfig& c, const std::string& v) { c.pitch.min_f0_hz = parse_double(v); }},
      {"pitch.max_f0",
       [](FrontendConfig& c, const std::string& v) { c.pitch.max_f0_hz = parse_double(v); }},
      {"pitch.octave_cost",
       [](FrontendConfig& c, const std::string& v) { c.pitch.octave_cost = parse_double(v); }},
      {"pitch.voicing_threshold",
       [](FrontendConfig& c, const std::string& v) {
         c.pitch.voicing_threshold = parse_double(v);
       }},
      {"sad.threshold",
       [](FrontendConfig& c, const std::string& v) { c.sad.threshold = parse_double(v); }},
      {"sad.mean_scale",
       [](FrontendConfig& c, const std::string& v) { c.sad.mean_scale = parse_double(v); }},
  };
  return table;
}

}  // namespace

void apply_override(FrontendConfig& cfg, const std::string& key, const std::string& value) {
  const auto& table = key_table();
  const auto it = table.find(key);
  if (it == table.end()) throw std::invalid_argument("unknown config key: " + key);
  try {
    it->second(cfg, value);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  }
}

void apply_override_arg(FrontendConfig& cfg, const std::string& key_equals_value) {
  const auto eq = key_equals_value.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("expected key=value, got '" + key_equals_value + "'");
  apply_override(cfg, trim(key_equals_value.substr(0, eq)),
                 trim(key_equals_value.substr(eq + 1)));
}

void load_config_file(FrontendConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;
    try {
      apply_override_arg(cfg, line);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

FeatureMatrix extract_feature(const Waveform& w, FeatureKind kind,
                              const FrontendConfig& cfg) {
  switch (kind) {
    case FeatureKind::kMfcc:
      return mfcc(w, cfg.cepstral);
    case FeatureKind::kMultitaperMfcc:
      return multitaper_mfcc(w, cfg.cepstral, cfg.multitaper_tapers,
                             cfg.multitaper_uniform_weights ? TaperWeighting::kUniform
                                                            : TaperWeighting::kCosine);
    case FeatureKind::kLpcc: {
      CepstralConfig c = cfg.cepstral;
      c.lp_order = cfg.lpcc_order;
      return lpcc(w, c);
    }
    case FeatureKind::kPlpcc: {
      CepstralConfig c = cfg.cepstral;
      c.lp_order = cfg.plpcc_order;
      return plpcc(w, c);
    }
    case FeatureKind::kScfc:
      return scfc(w, cfg.cepstral);
    case FeatureKind::kScmc:
      return scmc(w, cfg.cepstral);
    case FeatureKind::kCqcc:
      return cqcc(w, cfg.cqcc);
    case FeatureKind::kMgdf:
      return mgdf(w, cfg.mgdf);
    case FeatureKind::kApgdf: {
      CepstralConfig c = cfg.cepstral;
      c.lp_order = cfg.apgdf_order;
      return apgdf(w, c);
    }
    case FeatureKind::kCosphase:
      return cosphase(w, cfg.cepstral);
    case FeatureKind::kCmpoc:
      return cmpoc(w, cfg.cmpoc);
    case FeatureKind::kMhec:
      return mhec(w, cfg.mhec);
    case FeatureKind::kPncc:
      return pncc(w, cfg.pncc);
    case FeatureKind::kMfccPitch:
      return append_pitch(mfcc(w, cfg.cepstral), extract_pitch(w, cfg.pitch));
  }
  throw std::invalid_argument("extract_feature: unknown kind");
}

}  // namespace sigfeat
