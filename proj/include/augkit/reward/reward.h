// augkit/reward/reward.h

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

#ifndef AUGKIT_REWARD_REWARD_H_
#define AUGKIT_REWARD_REWARD_H_

#include <cstddef>
#include <string_view>

#include "augkit/reward/align.h"
#include "augkit/reward/text.h"

namespace augkit {

struct RewardConfig {
  /// WER at or above which the dynamic reward favours reconstruction.
  double tau = 0.3;
  /// Weight of a soft (acoustically similar) substitution, in (0, 1).
  double alpha_s = 0.4;
  /// Weight of the dynamic reward in the final combination, in [0, 1].
  double alpha_dyn = 0.6;
  double epsilon = 1e-8;
  /// A hypothesis fails the repetition gate if some n-gram with
  /// n <= rep_ngram_max occurs rep_run_threshold or more times in a row.
  int rep_ngram_max = 4;
  int rep_run_threshold = 4;
  /// Substitutions with similarity >= sim_threshold are soft.
  double sim_threshold = 0.5;
};

/// Throws std::invalid_argument when a field is out of range.
void ValidateRewardConfig(const RewardConfig& cfg);

struct ErrorCounts {
  std::size_t n_correct = 0;
  std::size_t n_soft = 0;
  /// Hard substitutions plus every insertion and deletion.
  std::size_t n_hard = 0;
};

struct RewardBreakdown {
  double wer = 0.0;
  double r_wer = 0.0;
  double r_rep = 1.0;
  double r_static = 0.0;
  double r_fine = 0.0;
  double r_struc = 0.0;
  double r_dynamic = 0.0;
  double r_total = 0.0;
  ErrorCounts counts;
};

/// 0 if the hypothesis collapses into a repeated n-gram loop, else 1. With a
/// reference, a loop is tolerated when the reference repeats the same n-gram
/// at least as many times in a row ("ha ha ha ha" transcribed faithfully).
double RepetitionReward(const TokenSequence& hyp, const RewardConfig& cfg,
                        const TokenSequence* ref = nullptr);

ErrorCounts ClassifyErrors(const AlignmentResult& a, const RewardConfig& cfg);

/// n_C / (n_C + n_hard + alpha_s n_soft + epsilon). An error-free alignment
/// with at least one correct token scores exactly 1; no tokens at all
/// scores 0.
double FineReward(const ErrorCounts& counts, const RewardConfig& cfg);
inline double FineReward(const AlignmentResult& a, const RewardConfig& cfg) {
  return FineReward(ClassifyErrors(a, cfg), cfg);
}

/// Half LCS coverage of the reference, half length agreement. Throws
/// std::invalid_argument on an empty reference.
double StructureReward(const TokenSequence& hyp, const TokenSequence& ref);

/// 0.75 fine + 0.25 struc below tau, mirrored at or above it.
double DynamicReward(double r_fine, double r_struc, double wer,
                     const RewardConfig& cfg);

/// (1 - alpha_dyn) r_static + alpha_dyn r_dynamic.
double CombineReward(double r_static, double r_dynamic,
                     const RewardConfig& cfg);

/// Full breakdown for already-normalized token sequences.
RewardBreakdown ScoreTokens(const TokenSequence& hyp, const TokenSequence& ref,
                            const RewardConfig& cfg);

/// Normalizes both strings with `mode` and scores them. Throws
/// std::invalid_argument if the reference has no tokens.
RewardBreakdown Score(std::string_view hyp_raw, std::string_view ref_raw,
                      const RewardConfig& cfg, ScriptMode mode);

}  // namespace augkit

#endif  // AUGKIT_REWARD_REWARD_H_
