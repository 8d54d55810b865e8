// augkit/pipeline/manifest.h

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

#ifndef AUGKIT_PIPELINE_MANIFEST_H_
#define AUGKIT_PIPELINE_MANIFEST_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "augkit/scenario/catalog.h"

namespace augkit {

struct Message {
  std::string role;
  std::string content;
  friend bool operator==(const Message&, const Message&) = default;
};

/// Default prompt turns of a synthesized record.
std::vector<Message> DefaultMessages();

/// One row of a JSONL training manifest.
struct ManifestRecord {
  std::vector<Message> messages;
  std::vector<std::string> audios;  // exactly one entry
  std::string solution;
  std::optional<std::string> prediction;
  std::optional<double> base_wer;  // present iff prediction is
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  friend bool operator==(const ManifestRecord&, const ManifestRecord&) = default;
};

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ManifestError if a record invariant does not hold.
void ValidateRecord(const ManifestRecord& r);

/// Fields in schema order: messages, audios, solution, [prediction,
/// base_wer,] meta.
nlohmann::ordered_json RecordToJson(const ManifestRecord& r);
/// Throws ManifestError on missing or mistyped fields.
ManifestRecord RecordFromJson(const nlohmann::ordered_json& j);

/// Single-line UTF-8 JSON, no trailing newline.
std::string SerializeRecord(const ManifestRecord& r);
ManifestRecord ParseRecord(std::string_view line);

nlohmann::ordered_json ParamValueToJson(const ParamValue& v);
nlohmann::ordered_json ParamMapToJson(const ParamMap& params);

}  // namespace augkit

#endif  // AUGKIT_PIPELINE_MANIFEST_H_
