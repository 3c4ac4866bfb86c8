// src/metrics.cpp

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

#include "sigfeat/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sigfeat {

namespace {

struct SortedScores {
  std::vector<double> targets;     // ascending
  std::vector<double> nontargets;  // ascending
};

SortedScores split_and_sort(const TrialScores& t) {
  SortedScores s;
  for (const Trial& trial : t.trials) {
    if (!std::isfinite(trial.score))
      throw std::invalid_argument("trial scores must be finite");
    (trial.is_target ? s.targets : s.nontargets).push_back(trial.score);
  }
  if (s.targets.empty() || s.nontargets.empty())
    throw std::invalid_argument("need at least one target and one nontarget trial");
  std::sort(s.targets.begin(), s.targets.end());
  std::sort(s.nontargets.begin(), s.nontargets.end());
  return s;
}

// Candidate thresholds: below everything, midpoints between adjacent
// distinct scores, above everything.
std::vector<double> candidate_thresholds(const SortedScores& s) {
  std::vector<double> all;
  all.reserve(s.targets.size() + s.nontargets.size());
  all.insert(all.end(), s.targets.begin(), s.targets.end());
  all.insert(all.end(), s.nontargets.begin(), s.nontargets.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<double> thresholds;
  thresholds.reserve(all.size() + 1);
  thresholds.push_back(all.front() - 1.0);
  for (std::size_t i = 0; i + 1 < all.size(); ++i)
    thresholds.push_back(0.5 * (all[i] + all[i + 1]));
  thresholds.push_back(all.back() + 1.0);
  return thresholds;
}

// accept iff score >= threshold
DetPoint operating_point(const SortedScores& s, double threshold) {
  DetPoint p;
  p.threshold = threshold;
  const auto miss = std::lower_bound(s.targets.begin(), s.targets.end(), threshold) -
                    s.targets.begin();
  const auto fa = s.nontargets.end() -
                  std::lower_bound(s.nontargets.begin(), s.nontargets.end(), threshold);
  p.p_miss = static_cast<double>(miss) / static_cast<double>(s.targets.size());
  p.p_fa = static_cast<double>(fa) / static_cast<double>(s.nontargets.size());
  return p;
}

}  // namespace

double eer(const TrialScores& t) {
  const SortedScores s = split_and_sort(t);
  const std::vector<double> thresholds = candidate_thresholds(s);
  DetPoint prev = operating_point(s, thresholds.front());
  for (double threshold : thresholds) {
    const DetPoint p = operating_point(s, threshold);
    const double d = p.p_fa - p.p_miss;
    if (d > 0.0) {
      prev = p;
      continue;
    }
    if (d == 0.0) return p.p_fa;
    // crossed between prev and p; interpolate along the segment
    const double d_prev = prev.p_fa - prev.p_miss;
    const double frac = d_prev / (d_prev - d);
    return prev.p_fa + frac * (p.p_fa - prev.p_fa);
  }
  return prev.p_fa;  // unreachable: the last point always has p_miss = 1
}

double min_dcf(const TrialScores& t, const DcfParams& params) {
  if (!(params.p_target > 0.0) || !(params.p_target < 1.0))
    throw std::invalid_argument("min_dcf: p_target must lie in (0, 1)");
  if (!(params.c_fa > 0.0) || !(params.c_miss > 0.0))
    throw std::invalid_argument("min_dcf: costs must be positive");
  const SortedScores s = split_and_sort(t);
  const double w_miss = params.c_miss * params.p_target;
  const double w_fa = params.c_fa * (1.0 - params.p_target);
  const double norm = std::min(w_miss, w_fa);
  double best = std::numeric_limits<double>::infinity();
  for (double threshold : candidate_thresholds(s)) {
    const DetPoint p = operating_point(s, threshold);
    best = std::min(best, (w_miss * p.p_miss + w_fa * p.p_fa) / norm);
  }
  return best;
}

DetCurve det_points(const TrialScores& t) {
  const SortedScores s = split_and_sort(t);
  DetCurve curve;
  for (double threshold : candidate_thresholds(s))
    curve.points.push_back(operating_point(s, threshold));
  return curve;
}

TrialScores fuse_scores(const std::vector<TrialScores>& systems) {
  if (systems.empty()) throw std::invalid_argument("fuse_scores: no systems given");
  std::map<std::string, std::pair<bool, double>> acc;  // id -> (label, sum)
  for (const Trial& trial : systems.front().trials) {
    if (!acc.emplace(trial.id, std::make_pair(trial.is_target, trial.score)).second)
      throw std::invalid_argument("fuse_scores: duplicate trial id " + trial.id);
  }
  for (std::size_t k = 1; k < systems.size(); ++k) {
    if (systems[k].trials.size() != systems.front().trials.size())
      throw std::invalid_argument("fuse_scores: trial sets differ in size");
    std::size_t seen = 0;
    std::map<std::string, bool> dedup;
    for (const Trial& trial : systems[k].trials) {
      if (!dedup.emplace(trial.id, true).second)
        throw std::invalid_argument("fuse_scores: duplicate trial id " + trial.id);
      auto it = acc.find(trial.id);
      if (it == acc.end())
        throw std::invalid_argument("fuse_scores: trial id mismatch at " + trial.id);
      if (it->second.first != trial.is_target)
        throw std::invalid_argument("fuse_scores: label conflict at " + trial.id);
      it->second.second += trial.score;
      ++seen;
    }
    if (seen != acc.size())
      throw std::invalid_argument("fuse_scores: trial sets do not match");
  }

  TrialScores fused;
  const double inv = 1.0 / static_cast<double>(systems.size());
  for (const Trial& trial : systems.front().trials) {
    const auto& entry = acc.at(trial.id);
    fused.trials.push_back({trial.id, entry.first, entry.second * inv});
  }
  return fused;
}

TrialScores load_scores(std::istream& in, const std::string& name) {
  TrialScores out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    Trial trial;
    std::string label, extra;
    if (!(ls >> trial.id >> label >> trial.score) || (ls >> extra))
      throw std::runtime_error(name + ":" + std::to_string(line_no) +
                               ": expected '<trial_id> <target|nontarget> <score>'");
    if (label == "target")
      trial.is_target = true;
    else if (label == "nontarget")
      trial.is_target = false;
    else
      throw std::runtime_error(name + ":" + std::to_string(line_no) +
                               ": bad label '" + label + "'");
    if (!std::isfinite(trial.score))
      throw std::runtime_error(name + ":" + std::to_string(line_no) + ": non-finite score");
    out.trials.push_back(std::move(trial));
  }
  return out;
}

TrialScores load_scores_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open score file " + path);
  return load_scores(in, path);
}

void save_scores(const TrialScores& t, std::ostream& out) {
  out.precision(17);
  for (const Trial& trial : t.trials)
    out << trial.id << ' ' << (trial.is_target ? "target" : "nontarget") << ' '
        << trial.score << '\n';
}

void save_scores_file(const TrialScores& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write score file " + path);
  save_scores(t, out);
}

}  // namespace sigfeat
