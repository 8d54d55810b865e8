// augkit/src/pipeline/score_file.cc

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

#include "augkit/pipeline/score_file.h"

#include <string>

#include "augkit/pipeline/log.h"

namespace augkit {

using nlohmann::ordered_json;

namespace {

std::string RequireString(const ordered_json& row, const char* key) {
  if (!row.contains(key) || !row[key].is_string()) {
    throw std::invalid_argument(std::string("missing string field ") + key);
  }
  return row[key].get<std::string>();
}

}  // namespace

ordered_json BreakdownToJson(const RewardBreakdown& b) {
  ordered_json j;
  j["wer"] = b.wer;
  j["r_wer"] = b.r_wer;
  j["r_rep"] = b.r_rep;
  j["r_static"] = b.r_static;
  j["r_fine"] = b.r_fine;
  j["r_struc"] = b.r_struc;
  j["r_dynamic"] = b.r_dynamic;
  j["r_total"] = b.r_total;
  j["n_correct"] = b.counts.n_correct;
  j["n_soft"] = b.counts.n_soft;
  j["n_hard"] = b.counts.n_hard;
  return j;
}

ordered_json ScoreSummaryToJson(const ScoreSummary& s) {
  ordered_json j;
  j["rows"] = s.rows;
  j["scored"] = s.scored;
  j["failed"] = s.failed;
  j["mean_wer"] = s.mean_wer;
  j["mean_r_total"] = s.mean_r_total;
  return j;
}

ScoreSummary ScoreStream(std::istream& in, std::ostream& out,
                         const RewardConfig& cfg,
                         std::optional<ScriptMode> mode) {
  ValidateRewardConfig(cfg);
  ScoreSummary s;
  double wer_sum = 0.0, total_sum = 0.0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::size_t index = s.rows++;
    ordered_json row_out;
    row_out["index"] = index;
    try {
      const ordered_json row = ordered_json::parse(line);
      if (!row.is_object()) throw std::invalid_argument("row is not an object");
      const std::string hyp = RequireString(row, "hypothesis");
      const std::string ref = RequireString(row, "reference");
      ScriptMode row_mode = ScriptMode::kSpaceDelimited;
      if (mode) {
        row_mode = *mode;
      } else if (row.contains("language")) {
        if (!row["language"].is_string()) {
          throw std::invalid_argument("language must be a string");
        }
        row_mode = ScriptModeForLanguage(row["language"].get<std::string>());
      }
      const RewardBreakdown b = Score(hyp, ref, cfg, row_mode);
      row_out.update(BreakdownToJson(b));
      wer_sum += b.wer;
      total_sum += b.r_total;
      ++s.scored;
    } catch (const std::exception& e) {
      row_out["error"] = e.what();
      ++s.failed;
      LogEvent("error", "row_rejected", {{"index", index}, {"reason", e.what()}});
    }
    out << row_out.dump() << '\n';
  }
  if (s.scored > 0) {
    s.mean_wer = wer_sum / static_cast<double>(s.scored);
    s.mean_r_total = total_sum / static_cast<double>(s.scored);
  }
  return s;
}

}  // namespace augkit
