// include/sigfeat/featureset.hpp

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

// One configuration object covering every extractor, a key=value override
// mechanism for config files and command-line flags, and the dispatcher
// that runs any of the 14 extractors.

#ifndef SIGFEAT_FEATURESET_HPP
#define SIGFEAT_FEATURESET_HPP

#include <string>

#include "sigfeat/phase.hpp"
#include "sigfeat/pitch.hpp"
#include "sigfeat/postproc.hpp"
#include "sigfeat/robust.hpp"
#include "sigfeat/spectral.hpp"
#include "sigfeat/types.hpp"

namespace sigfeat {

struct FrontendConfig {
  CepstralConfig cepstral;
  int lpcc_order = 30;
  int plpcc_order = 30;
  int apgdf_order = 30;
  int multitaper_tapers = 8;
  bool multitaper_uniform_weights = false;
  MgdfConfig mgdf;
  CqccConfig cqcc;
  CmpocConfig cmpoc;
  MhecConfig mhec;
  PnccConfig pncc;
  PitchConfig pitch;
  SadConfig sad;
};

/// Applies one `key=value` override (the key set is listed in the README;
/// e.g. "mgdf.alpha", "cepstral.n_fft", "frame.shift_ms"). Throws
/// std::invalid_argument on an unknown key or unparseable value.
void apply_override(FrontendConfig& cfg, const std::string& key,
                    const std::string& value);

/// Parses a `--set key=value` style argument.
void apply_override_arg(FrontendConfig& cfg, const std::string& key_equals_value);

/// Loads `key = value` lines; '#' and ';' start comments.
void load_config_file(FrontendConfig& cfg, const std::string& path);

/// Runs the extractor selected by `kind` with this configuration.
FeatureMatrix extract_feature(const Waveform& w, FeatureKind kind,
                              const FrontendConfig& cfg = {});

}  // namespace sigfeat

#endif  // SIGFEAT_FEATURESET_HPP
