// src/types.cpp

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

#include "sigfeat/types.hpp"

#include <array>
#include <stdexcept>

namespace sigfeat {

namespace {

constexpr std::array<FeatureKind, 14> kAllKinds = {
    FeatureKind::kMfcc,    FeatureKind::kMultitaperMfcc, FeatureKind::kLpcc,
    FeatureKind::kPlpcc,   FeatureKind::kScfc,           FeatureKind::kScmc,
    FeatureKind::kCqcc,    FeatureKind::kMgdf,           FeatureKind::kApgdf,
    FeatureKind::kCosphase, FeatureKind::kCmpoc,         FeatureKind::kMhec,
    FeatureKind::kPncc,    FeatureKind::kMfccPitch,
};

}  // namespace

std::string feature_kind_name(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kMfcc: return "mfcc";
    case FeatureKind::kMultitaperMfcc: return "multitaper";
    case FeatureKind::kLpcc: return "lpcc";
    case FeatureKind::kPlpcc: return "plpcc";
    case FeatureKind::kScfc: return "scfc";
    case FeatureKind::kScmc: return "scmc";
    case FeatureKind::kCqcc: return "cqcc";
    case FeatureKind::kMgdf: return "mgdf";
    case FeatureKind::kApgdf: return "apgdf";
    case FeatureKind::kCosphase: return "cosphase";
    case FeatureKind::kCmpoc: return "cmpoc";
    case FeatureKind::kMhec: return "mhec";
    case FeatureKind::kPncc: return "pncc";
    case FeatureKind::kMfccPitch: return "mfcc_pitch";
  }
  throw std::invalid_argument("feature_kind_name: unknown kind");
}

FeatureKind feature_kind_from_name(const std::string& name) {
  for (FeatureKind kind : kAllKinds)
    if (feature_kind_name(kind) == name) return kind;
  if (name == "mfcc+pitch") return FeatureKind::kMfccPitch;
  throw std::invalid_argument("unknown feature kind: " + name);
}

std::span<const FeatureKind> all_feature_kinds() { return kAllKinds; }

}  // namespace sigfeat
