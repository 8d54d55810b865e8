// augkit/reward/align.h

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

#ifndef AUGKIT_REWARD_ALIGN_H_
#define AUGKIT_REWARD_ALIGN_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "augkit/reward/text.h"

namespace augkit {

struct Substitution {
  std::string hyp;
  std::string ref;
  friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// Token-level edit alignment of a hypothesis against a reference.
/// n_correct + |substitutions| + n_deletions == |ref| and
/// n_correct + |substitutions| + n_insertions == |hyp|.
struct AlignmentResult {
  std::size_t n_correct = 0;
  std::vector<Substitution> substitutions;  // in reference order
  std::size_t n_insertions = 0;
  std::size_t n_deletions = 0;

  std::size_t errors() const {
    return substitutions.size() + n_insertions + n_deletions;
  }
  friend bool operator==(const AlignmentResult&, const AlignmentResult&) =
      default;
};

/// Levenshtein alignment with unit costs. Among optimal alignments the
/// backtrace, walking from the end, prefers match, then substitution, then
/// deletion, then insertion.
AlignmentResult Align(const TokenSequence& hyp, const TokenSequence& ref);

/// (S + I + D) / ref_len; may exceed 1. Throws std::invalid_argument when
/// ref_len is zero.
double ComputeWer(const AlignmentResult& a, std::size_t ref_len);

/// Length of the longest common token subsequence.
std::size_t LongestCommonSubsequence(const TokenSequence& a,
                                     const TokenSequence& b);

/// Code-point Levenshtein distance.
std::size_t CharEditDistance(std::u32string_view a, std::u32string_view b);

/// 1 - edit(h, r) / max(|h|, |r|) over code points. Throws
/// std::invalid_argument if both are empty.
double TokenSimilarity(std::string_view h, std::string_view r);

}  // namespace augkit

#endif  // AUGKIT_REWARD_ALIGN_H_
