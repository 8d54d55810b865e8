// augkit/pipeline/score_file.h

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

#ifndef AUGKIT_PIPELINE_SCORE_FILE_H_
#define AUGKIT_PIPELINE_SCORE_FILE_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>

#include "json.hpp"

#include "augkit/reward/reward.h"

namespace augkit {

struct ScoreSummary {
  std::size_t rows = 0;
  std::size_t scored = 0;
  std::size_t failed = 0;
  /// Means over scored rows; 0 when nothing was scored.
  double mean_wer = 0.0;
  double mean_r_total = 0.0;
};

nlohmann::ordered_json BreakdownToJson(const RewardBreakdown& b);
nlohmann::ordered_json ScoreSummaryToJson(const ScoreSummary& s);

/// Scores JSONL rows {"hypothesis", "reference", "language"?}. Writes one
/// output line per non-blank input row, in order: the reward breakdown, or
/// {"index", "error"} for a row that could not be scored. `mode` overrides
/// the per-row language when set. Indices count non-blank rows from 0.
ScoreSummary ScoreStream(std::istream& in, std::ostream& out,
                         const RewardConfig& cfg,
                         std::optional<ScriptMode> mode = std::nullopt);

}  // namespace augkit

#endif  // AUGKIT_PIPELINE_SCORE_FILE_H_
