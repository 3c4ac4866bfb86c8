// include/sigfeat/metrics.hpp

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

// Verification metrics over trial scores: equal error rate, minimum
// detection cost, detection-error-tradeoff points and equal-weighted score
// fusion. A trial is accepted at threshold t iff its score >= t.

#ifndef SIGFEAT_METRICS_HPP
#define SIGFEAT_METRICS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sigfeat {

struct Trial {
  std::string id;
  bool is_target = false;
  double score = 0.0;
};

struct TrialScores {
  std::vector<Trial> trials;
};

struct DcfParams {
  double p_target = 0.001;
  double c_fa = 1.0;
  double c_miss = 1.0;
};

struct DetPoint {
  double p_fa = 0.0;
  double p_miss = 0.0;
  double threshold = 0.0;
};

/// One point per candidate threshold (midpoints between distinct scores
/// plus one below and one above everything). p_fa is non-increasing and
/// p_miss non-decreasing along the sweep.
struct DetCurve {
  std::vector<DetPoint> points;
};

/// Rate at the crossing of P_fa and P_miss, linearly interpolated between
/// the two adjacent operating points that straddle it. Throws unless the
/// set holds at least one target and one nontarget trial.
double eer(const TrialScores& t);

/// min over thresholds of
///   (c_miss p P_miss + c_fa (1-p) P_fa) / min(c_miss p, c_fa (1-p)),
/// normalized so the reject-everything system scores 1.0.
double min_dcf(const TrialScores& t, const DcfParams& p = {});

DetCurve det_points(const TrialScores& t);

/// Equal-weighted linear fusion: per-trial arithmetic mean of the systems'
/// scores. All systems must cover the same trial ids with consistent
/// labels; ids must be unique within a system.
TrialScores fuse_scores(const std::vector<TrialScores>& systems);

/// Score file format: one `<trial_id> <target|nontarget> <score>` triple
/// per line, '#' starts a comment line. Parse errors report the line
/// number.
TrialScores load_scores(std::istream& in, const std::string& name = "scores");
TrialScores load_scores_file(const std::string& path);
void save_scores(const TrialScores& t, std::ostream& out);
void save_scores_file(const TrialScores& t, const std::string& path);

}  // namespace sigfeat

#endif  // SIGFEAT_METRICS_HPP
