// augkit/src/pipeline/manifest.cc

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

#include "augkit/pipeline/manifest.h"

#include <variant>

namespace augkit {

using nlohmann::ordered_json;

std::vector<Message> DefaultMessages() {
  return {
      {"system", "You are a speech recognition model."},
      {"user", "Transcribe the given audio and output plain text only."},
  };
}

void ValidateRecord(const ManifestRecord& r) {
  if (r.audios.size() != 1) {
    throw ManifestError("record must reference exactly one audio file, got " +
                        std::to_string(r.audios.size()));
  }
  if (r.solution.empty()) throw ManifestError("record has empty solution");
  if (r.prediction.has_value() != r.base_wer.has_value()) {
    throw ManifestError("prediction and base_wer must be present together");
  }
  if (!r.meta.is_object()) throw ManifestError("meta must be an object");
}

ordered_json RecordToJson(const ManifestRecord& r) {
  ordered_json j;
  j["messages"] = ordered_json::array();
  for (const Message& m : r.messages) {
    j["messages"].push_back({{"role", m.role}, {"content", m.content}});
  }
  j["audios"] = r.audios;
  j["solution"] = r.solution;
  if (r.prediction) j["prediction"] = *r.prediction;
  if (r.base_wer) j["base_wer"] = *r.base_wer;
  j["meta"] = r.meta;
  return j;
}

ManifestRecord RecordFromJson(const ordered_json& j) {
  if (!j.is_object()) throw ManifestError("record is not a JSON object");
  ManifestRecord r;
  try {
    for (const auto& m : j.at("messages")) {
      r.messages.push_back(
          {m.at("role").get<std::string>(), m.at("content").get<std::string>()});
    }
    r.audios = j.at("audios").get<std::vector<std::string>>();
    r.solution = j.at("solution").get<std::string>();
    if (j.contains("prediction") && !j["prediction"].is_null()) {
      r.prediction = j["prediction"].get<std::string>();
    }
    if (j.contains("base_wer") && !j["base_wer"].is_null()) {
      r.base_wer = j["base_wer"].get<double>();
    }
    if (j.contains("meta") && !j["meta"].is_null()) r.meta = j["meta"];
  } catch (const nlohmann::json::exception& e) {
    throw ManifestError(std::string("bad manifest record: ") + e.what());
  }
  return r;
}

std::string SerializeRecord(const ManifestRecord& r) {
  return RecordToJson(r).dump(-1, ' ', false,
                              nlohmann::json::error_handler_t::strict);
}

ManifestRecord ParseRecord(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ManifestError(std::string("invalid JSON: ") + e.what());
  }
  return RecordFromJson(j);
}

ordered_json ParamValueToJson(const ParamValue& v) {
  return std::visit([](const auto& x) { return ordered_json(x); }, v);
}

ordered_json ParamMapToJson(const ParamMap& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, value] : params) j[name] = ParamValueToJson(value);
  return j;
}

}  // namespace augkit
