// augkit/pipeline/synthesize.h

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

#ifndef AUGKIT_PIPELINE_SYNTHESIZE_H_
#define AUGKIT_PIPELINE_SYNTHESIZE_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "augkit/pipeline/chain_runner.h"
#include "augkit/pipeline/manifest.h"
#include "augkit/scenario/catalog.h"
#include "augkit/severity/severity.h"

namespace augkit {

/// One row of a clean-speech manifest: {"audio", "text", "language"}.
struct CleanClip {
  /// Path as written in the manifest; hashed into the sample id.
  std::string audio;
  /// `audio` resolved against the manifest's directory.
  std::filesystem::path resolved;
  std::string text;
  std::string language = "en";
};

/// Reads a clean JSONL manifest. Blank lines are ignored. Throws
/// ManifestError naming the line on malformed rows or an unreadable file.
std::vector<CleanClip> ReadCleanManifest(const std::filesystem::path& path);

/// Which catalog scenarios a job uses. Empty `ids` and no `arity` means all.
struct ScenarioSelector {
  std::vector<std::string> ids;
  std::optional<int> arity;
};

/// Throws std::invalid_argument on an unknown id, an arity with no
/// scenarios, or both criteria given at once.
std::vector<const ScenarioSpec*> SelectScenarios(const ScenarioSelector& sel);

struct SynthesisJob {
  std::filesystem::path clean_manifest;
  std::filesystem::path noise_dir;
  ScenarioSelector scenarios;
  SeverityProfile profile;
  int samples_per_clip = 1;
  std::filesystem::path output_dir;
  int workers = 1;
  std::vector<Message> messages = DefaultMessages();
};

struct SynthesisSummary {
  std::size_t written = 0;
  std::size_t skipped = 0;
  std::map<std::string, std::size_t> per_scenario;
  /// Skip reason category to count.
  std::map<std::string, std::size_t> skip_reasons;
};

nlohmann::ordered_json SummaryToJson(const SynthesisSummary& s);

/// Sample id of one (clip, scenario, replica) task.
std::uint64_t TaskSampleId(std::string_view clip, std::string_view scenario_id,
                           int replica);

/// Runs every (clip, scenario, replica) task and writes
/// output_dir/audio/*.wav plus output_dir/manifest.jsonl in task order.
/// Failed tasks are logged and counted, never fatal. Throws
/// std::invalid_argument for an invalid job and std::runtime_error when the
/// output directory or manifest cannot be created.
SynthesisSummary Synthesize(const SynthesisJob& job);

struct DegradeRequest {
  std::filesystem::path input;
  std::filesystem::path output;
  std::string scenario_id;
  /// At most one of these; with neither, x is drawn from the seed.
  std::optional<double> severity;
  std::optional<double> latent;
  SeverityProfile profile;
  std::filesystem::path noise_dir;
};

struct DegradeResult {
  ResolvedChain resolved;
  ChainRun run;
  nlohmann::ordered_json report;
};

/// One-shot degradation of a single file. Throws std::invalid_argument for
/// an unknown scenario or bad overrides, WavError on audio I/O failure.
DegradeResult Degrade(const DegradeRequest& req);

}  // namespace augkit

#endif  // AUGKIT_PIPELINE_SYNTHESIZE_H_
