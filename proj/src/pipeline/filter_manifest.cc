// augkit/src/pipeline/filter_manifest.cc

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

#include "augkit/pipeline/filter_manifest.h"

#include <string>

#include "augkit/pipeline/log.h"

namespace augkit {

nlohmann::ordered_json FilterSummaryToJson(const FilterSummary& s) {
  return {{"kept", s.kept}, {"dropped", s.dropped}, {"rejected", s.rejected}};
}

FilterSummary FilterManifestStream(std::istream& in, std::ostream& out,
                                   double max_wer) {
  FilterSummary s;
  std::string line;
  for (std::size_t index = 0; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::size_t row = index++;
    const auto row_json = nlohmann::json::parse(line, nullptr, false);
    const char* reason = nullptr;
    if (row_json.is_discarded() || !row_json.is_object()) {
      reason = "invalid JSON object";
    } else if (!row_json.contains("base_wer")) {
      reason = "missing base_wer";
    } else if (!row_json["base_wer"].is_number()) {
      reason = "base_wer is not a number";
    }
    if (reason != nullptr) {
      ++s.rejected;
      LogEvent("error", "row_rejected", {{"index", row}, {"reason", reason}});
      continue;
    }
    if (row_json["base_wer"].get<double>() <= max_wer) {
      out << line << '\n';
      ++s.kept;
    } else {
      ++s.dropped;
    }
  }
  return s;
}

}  // namespace augkit
