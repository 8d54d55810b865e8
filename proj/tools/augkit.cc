// augkit/tools/augkit.cc

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

// Command-line driver: corpus synthesis, single-file degradation, reward
// scoring, learnability filtering and catalog listing.
//
// Exit status: 0 on success, 1 when some rows or tasks failed or an I/O
// error stopped the run, 2 on an invalid invocation.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "augkit/pipeline/filter_manifest.h"
#include "augkit/pipeline/log.h"
#include "augkit/pipeline/score_file.h"
#include "augkit/pipeline/synthesize.h"
#include "augkit/reward/reward.h"
#include "augkit/scenario/catalog.h"
#include "augkit/severity/severity.h"

namespace {

using namespace augkit;
using nlohmann::ordered_json;

constexpr int kExitPartial = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeverityFlags {
  std::uint64_t seed = 0;
  std::string mapping = "linear";
  double sigma = 0.25;

  void Register(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Corpus seed")->capture_default_str();
    cmd->add_option("--mapping", mapping,
                    "linear | sqrt-forward | sqrt-backward | gaussian-mid")
        ->capture_default_str();
    cmd->add_option("--sigma", sigma, "Spread of gaussian-mid")
        ->capture_default_str();
  }

  SeverityProfile Profile() const {
    const auto m = ParseSeverityMapping(mapping);
    if (!m) throw UsageError("unknown mapping: " + mapping);
    if (!(sigma > 0.0)) throw UsageError("--sigma must be positive");
    return {*m, sigma, seed};
  }
};

std::string ValidScenarioIds() {
  std::string out;
  for (const ScenarioSpec& s : EnumerateScenarios()) out += "\n  " + s.id;
  return out;
}

void CheckScenarioIds(const std::vector<std::string>& ids) {
  for (const std::string& id : ids) {
    if (FindScenario(id) == nullptr) {
      throw UsageError("unknown scenario '" + id + "'; valid ids:" +
                       ValidScenarioIds());
    }
  }
}

// Opens `path` for reading, with "-" meaning stdin.
std::istream& OpenInput(const std::string& path, std::ifstream& file) {
  if (path == "-") return std::cin;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

std::ostream& OpenOutput(const std::string& path, std::ofstream& file) {
  if (path == "-") return std::cout;
  file.open(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

// Summaries go to stdout unless stdout already carries the data.
void EmitSummary(const std::string& output, std::string_view event,
                 const ordered_json& summary) {
  if (output == "-") {
    LogEvent("info", event, summary);
  } else {
    std::cout << summary.dump() << '\n';
  }
}

std::optional<ScriptMode> ParseScriptMode(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "space") return ScriptMode::kSpaceDelimited;
  if (s == "char") return ScriptMode::kCharacter;
  throw UsageError("--script-mode must be auto, space or char");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"augkit: acoustic scenario synthesis and ASR reward scoring"};
  app.require_subcommand(1);

  // synthesize
  SynthesisJob job;
  SeverityFlags synth_sev;
  std::string clean_manifest, noise_dir, output_dir;
  std::vector<std::string> synth_ids;
  std::optional<int> arity;
  auto* synth = app.add_subcommand("synthesize", "Build a degraded corpus");
  synth->add_option("--clean-manifest", clean_manifest,
                    "JSONL of {audio, text, language}")
      ->required();
  synth->add_option("--noise-dir", noise_dir, "Directory of noise .wav clips");
  synth->add_option("--output-dir", output_dir)->required();
  auto* scenario_opt =
      synth->add_option("--scenario", synth_ids, "Scenario id (repeatable)");
  synth->add_option("--arity", arity, "Use every scenario of this arity")
      ->check(CLI::Range(1, 5))
      ->excludes(scenario_opt);
  synth->add_option("--samples-per-clip", job.samples_per_clip)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth->add_option("--workers", job.workers)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth_sev.Register(synth);

  // degrade
  DegradeRequest req;
  SeverityFlags degrade_sev;
  std::string degrade_in, degrade_out, degrade_noise;
  auto* degrade = app.add_subcommand("degrade", "Degrade a single file");
  degrade->add_option("--input", degrade_in)->required();
  degrade->add_option("--output", degrade_out)->required();
  degrade->add_option("--scenario", req.scenario_id)->required();
  auto* sev_opt = degrade->add_option("--severity", req.severity,
                                      "Override m in [0, 1]");
  degrade->add_option("--latent", req.latent, "Override x in [0, 1]")
      ->excludes(sev_opt);
  degrade->add_option("--noise-dir", degrade_noise);
  degrade_sev.Register(degrade);

  // score
  RewardConfig cfg;
  std::string score_in = "-", score_out = "-", script_mode = "auto";
  auto* score = app.add_subcommand("score", "Score hypothesis/reference pairs");
  score->add_option("--input", score_in,
                    "JSONL of {hypothesis, reference, language}; - for stdin")
      ->capture_default_str();
  score->add_option("--output", score_out)->capture_default_str();
  score->add_option("--tau", cfg.tau, "WER gate")->capture_default_str();
  score->add_option("--alpha-s", cfg.alpha_s, "Soft substitution weight")
      ->capture_default_str();
  score->add_option("--alpha-dyn", cfg.alpha_dyn, "Dynamic reward weight")
      ->capture_default_str();
  score->add_option("--script-mode", script_mode, "auto | space | char")
      ->capture_default_str();

  // filter
  std::string filter_in = "-", filter_out = "-";
  double max_wer = kDefaultMaxWer;
  auto* filter = app.add_subcommand("filter", "Drop rows above a base WER");
  filter->add_option("--input", filter_in)->capture_default_str();
  filter->add_option("--output", filter_out)->capture_default_str();
  filter->add_option("--max-wer", max_wer)->capture_default_str();

  auto* list = app.add_subcommand("enumerate-scenarios",
                                  "Print the scenario catalog as JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*synth) {
      CheckScenarioIds(synth_ids);
      job.clean_manifest = clean_manifest;
      job.noise_dir = noise_dir;
      job.output_dir = output_dir;
      job.scenarios = {synth_ids, arity};
      job.profile = synth_sev.Profile();
      const SynthesisSummary s = Synthesize(job);
      std::cout << SummaryToJson(s).dump() << '\n';
      return s.skipped > 0 ? kExitPartial : 0;
    }
    if (*degrade) {
      CheckScenarioIds({req.scenario_id});
      req.input = degrade_in;
      req.output = degrade_out;
      req.noise_dir = degrade_noise;
      req.profile = degrade_sev.Profile();
      std::cout << Degrade(req).report.dump() << '\n';
      return 0;
    }
    if (*score) {
      const std::optional<ScriptMode> mode = ParseScriptMode(script_mode);
      std::ifstream in_file;
      std::ofstream out_file;
      std::istream& in = OpenInput(score_in, in_file);
      std::ostream& out = OpenOutput(score_out, out_file);
      const ScoreSummary s = ScoreStream(in, out, cfg, mode);
      out.flush();
      EmitSummary(score_out, "score_summary", ScoreSummaryToJson(s));
      return s.failed > 0 ? kExitPartial : 0;
    }
    if (*filter) {
      std::ifstream in_file;
      std::ofstream out_file;
      std::istream& in = OpenInput(filter_in, in_file);
      std::ostream& out = OpenOutput(filter_out, out_file);
      const FilterSummary s = FilterManifestStream(in, out, max_wer);
      out.flush();
      EmitSummary(filter_out, "filter_summary", FilterSummaryToJson(s));
      return s.rejected > 0 ? kExitPartial : 0;
    }
    if (*list) {
      for (const ScenarioSpec& s : EnumerateScenarios()) {
        ordered_json constituents = ordered_json::array();
        for (AtomicName a : s.effects) constituents.push_back(AtomicNameString(a));
        ordered_json row;
        row["id"] = s.id;
        row["constituents"] = std::move(constituents);
        row["arity"] = s.arity();
        row["group"] = ScenarioGroupName(s.group);
        std::cout << row.dump() << '\n';
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "augkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "augkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    LogEvent("error", "fatal", {{"detail", e.what()}});
    return kExitPartial;
  }
  return kExitUsage;
}
