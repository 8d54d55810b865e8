// augkit/src/reward/reward.cc

// Copyright 2026  The augkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "augkit/reward/reward.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace augkit {

void ValidateRewardConfig(const RewardConfig& cfg) {
  if (!(cfg.alpha_s > 0.0 && cfg.alpha_s < 1.0)) {
    throw std::invalid_argument("alpha_s must be in (0, 1)");
  }
  if (!(cfg.alpha_dyn >= 0.0 && cfg.alpha_dyn <= 1.0)) {
    throw std::invalid_argument("alpha_dyn must be in [0, 1]");
  }
  if (!(cfg.tau >= 0.0) || !std::isfinite(cfg.tau)) {
    throw std::invalid_argument("tau must be a finite non-negative number");
  }
  if (!(cfg.epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (cfg.rep_ngram_max < 1 || cfg.rep_run_threshold < 2) {
    throw std::invalid_argument(
        "rep_ngram_max must be >= 1 and rep_run_threshold >= 2");
  }
  if (!(cfg.sim_threshold >= 0.0 && cfg.sim_threshold <= 1.0)) {
    throw std::invalid_argument("sim_threshold must be in [0, 1]");
  }
}

namespace {

// Longest run of back-to-back copies of seq[start, start + n) beginning at
// `start`.
std::size_t CopiesFrom(const TokenSequence& seq, std::size_t start,
                       std::size_t n) {
  std::size_t copies = 1;
  std::size_t next = start + n;
  while (next + n <= seq.size() &&
         std::equal(seq.begin() + start, seq.begin() + start + n,
                    seq.begin() + next)) {
    ++copies;
    next += n;
  }
  return copies;
}

// Longest consecutive run of `gram` anywhere in seq.
std::size_t LongestRunOf(const TokenSequence& seq, const TokenSequence& gram) {
  std::size_t best = 0;
  const std::size_t n = gram.size();
  for (std::size_t start = 0; start + n <= seq.size(); ++start) {
    if (std::equal(gram.begin(), gram.end(), seq.begin() + start)) {
      best = std::max(best, CopiesFrom(seq, start, n));
    }
  }
  return best;
}

}  // namespace

double RepetitionReward(const TokenSequence& hyp, const RewardConfig& cfg,
                        const TokenSequence* ref) {
  const std::size_t len = hyp.size();
  const auto runs = static_cast<std::size_t>(cfg.rep_run_threshold);
  for (std::size_t n = 1; n <= static_cast<std::size_t>(cfg.rep_ngram_max);
       ++n) {
    if (n * runs > len) break;
    for (std::size_t start = 0; start + n * runs <= len; ++start) {
      const std::size_t copies = CopiesFrom(hyp, start, n);
      if (copies < runs) continue;
      if (ref != nullptr) {
        const TokenSequence gram(hyp.begin() + start,
                                 hyp.begin() + start + n);
        if (LongestRunOf(*ref, gram) >= copies) continue;
      }
      return 0.0;
    }
  }
  return 1.0;
}

ErrorCounts ClassifyErrors(const AlignmentResult& a, const RewardConfig& cfg) {
  ErrorCounts c;
  c.n_correct = a.n_correct;
  c.n_hard = a.n_insertions + a.n_deletions;
  for (const Substitution& s : a.substitutions) {
    if (TokenSimilarity(s.hyp, s.ref) >= cfg.sim_threshold) {
      ++c.n_soft;
    } else {
      ++c.n_hard;
    }
  }
  return c;
}

double FineReward(const ErrorCounts& counts, const RewardConfig& cfg) {
  if (counts.n_correct == 0) return 0.0;
  if (counts.n_hard == 0 && counts.n_soft == 0) return 1.0;
  const double n_c = static_cast<double>(counts.n_correct);
  return n_c / (n_c + static_cast<double>(counts.n_hard) +
                cfg.alpha_s * static_cast<double>(counts.n_soft) +
                cfg.epsilon);
}

double StructureReward(const TokenSequence& hyp, const TokenSequence& ref) {
  if (ref.empty()) {
    throw std::invalid_argument("StructureReward: empty reference");
  }
  const double r = static_cast<double>(ref.size());
  const double lcs = static_cast<double>(LongestCommonSubsequence(hyp, ref));
  const double length_gap =
      std::abs(static_cast<double>(hyp.size()) - r) / r;
  return 0.5 * (lcs / r) + 0.5 * std::max(0.0, 1.0 - length_gap);
}

double DynamicReward(double r_fine, double r_struc, double wer,
                     const RewardConfig& cfg) {
  if (wer < cfg.tau) return 0.75 * r_fine + 0.25 * r_struc;
  return 0.25 * r_fine + 0.75 * r_struc;
}

double CombineReward(double r_static, double r_dynamic,
                     const RewardConfig& cfg) {
  // Interpolation form: equal inputs come back unchanged for any weight.
  return r_static + cfg.alpha_dyn * (r_dynamic - r_static);
}

RewardBreakdown ScoreTokens(const TokenSequence& hyp, const TokenSequence& ref,
                            const RewardConfig& cfg) {
  if (ref.empty()) {
    throw std::invalid_argument("empty reference after normalization");
  }
  const AlignmentResult alignment = Align(hyp, ref);
  RewardBreakdown b;
  b.wer = ComputeWer(alignment, ref.size());
  b.r_wer = 1.0 - b.wer;
  b.r_rep = RepetitionReward(hyp, cfg, &ref);
  b.r_static = b.r_rep * b.r_wer;
  b.counts = ClassifyErrors(alignment, cfg);
  b.r_fine = FineReward(b.counts, cfg);
  b.r_struc = StructureReward(hyp, ref);
  b.r_dynamic = DynamicReward(b.r_fine, b.r_struc, b.wer, cfg);
  b.r_total = CombineReward(b.r_static, b.r_dynamic, cfg);
  return b;
}

RewardBreakdown Score(std::string_view hyp_raw, std::string_view ref_raw,
                      const RewardConfig& cfg, ScriptMode mode) {
  return ScoreTokens(NormalizeText(hyp_raw, mode), NormalizeText(ref_raw, mode),
                     cfg);
}

}  // namespace augkit
