// augkit/src/pipeline/synthesize.cc

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

#include "augkit/pipeline/synthesize.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>

#include "augkit/audio/random.h"
#include "augkit/audio/resample.h"
#include "augkit/audio/wav_io.h"
#include "augkit/pipeline/log.h"

namespace augkit {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Task {
  std::size_t clip;
  const ScenarioSpec* scenario;
  int replica;
};

struct TaskOutcome {
  std::optional<ManifestRecord> record;
  std::string skip_reason;
};

std::string AudioName(std::size_t clip_index, const CleanClip& clip,
                      const ScenarioSpec& s, int replica) {
  char prefix[16];
  std::snprintf(prefix, sizeof prefix, "c%05zu_", clip_index);
  return std::string(prefix) + fs::path(clip.audio).stem().string() + "__" +
         s.id + "__r" + std::to_string(replica) + ".wav";
}

ordered_json ProfileMeta(ordered_json meta, const SeverityProfile& profile) {
  meta["mapping"] = SeverityMappingName(profile.mapping);
  if (profile.mapping == SeverityMapping::kGaussianMid) {
    meta["sigma"] = profile.sigma;
  }
  meta["seed"] = profile.seed;
  return meta;
}

bool AnyClipped(const std::vector<AppliedEffect>& applied) {
  return std::any_of(applied.begin(), applied.end(),
                     [](const AppliedEffect& a) { return a.clipped; });
}

std::string Category(const std::exception& e) {
  if (const auto* w = dynamic_cast<const WavError*>(&e)) {
    switch (w->kind()) {
      case WavErrorKind::kUnreadable: return "unreadable_audio";
      case WavErrorKind::kUnsupported: return "unsupported_audio";
      case WavErrorKind::kEmpty: return "empty_audio";
      case WavErrorKind::kUnwritable: return "unwritable_output";
    }
  }
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid_signal";
  return "error";
}

TaskOutcome RunTask(const SynthesisJob& job, const std::vector<CleanClip>& clips,
                    const std::vector<MergedChain>& merged,
                    const NoisePool& pool, const Task& task,
                    std::size_t scenario_index) {
  const CleanClip& clip = clips[task.clip];
  const ScenarioSpec& s = *task.scenario;
  const std::uint64_t sample_id = TaskSampleId(clip.audio, s.id, task.replica);
  const std::string name = AudioName(task.clip, clip, s, task.replica);
  try {
    const Waveform input =
        ResampleTo(LoadWav(clip.resolved), kCanonicalSampleRate);
    const ResolvedChain resolved =
        InstantiateChain(merged[scenario_index], job.profile, sample_id);
    const ChainRun run = RunChain(input, resolved, &pool);
    SaveWav(run.audio, job.output_dir / "audio" / name);

    ManifestRecord r;
    r.messages = job.messages;
    r.audios = {(fs::path("audio") / name).generic_string()};
    r.solution = clip.text;
    ordered_json meta;
    meta["scenario_id"] = s.id;
    meta["group"] = ScenarioGroupName(s.group);
    meta["arity"] = s.arity();
    meta["severity"] = resolved.severity;
    meta["latent"] = resolved.latent;
    meta = ProfileMeta(std::move(meta), job.profile);
    meta["sample_id"] = sample_id;
    meta["replica"] = task.replica;
    meta["language"] = clip.language;
    meta["source_audio"] = clip.audio;
    meta["chain"] = AppliedChainToJson(run.applied);
    meta["clipped"] = AnyClipped(run.applied);
    r.meta = std::move(meta);
    return {std::move(r), {}};
  } catch (const std::exception& e) {
    LogEvent("error", "task_skipped",
             {{"clip", clip.audio},
              {"scenario_id", s.id},
              {"replica", task.replica},
              {"reason", Category(e)},
              {"detail", e.what()}});
    return {std::nullopt, Category(e)};
  }
}

}  // namespace

std::vector<CleanClip> ReadCleanManifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open " + path.string());
  const fs::path base = path.parent_path();
  std::vector<CleanClip> clips;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path.string() + ":" + std::to_string(n);
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ManifestError(where + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("audio") || !j["audio"].is_string() ||
        !j.contains("text") || !j["text"].is_string()) {
      throw ManifestError(where + ": expected string fields audio and text");
    }
    CleanClip c;
    c.audio = j["audio"].get<std::string>();
    c.resolved = fs::path(c.audio).is_absolute() ? fs::path(c.audio)
                                                 : base / c.audio;
    c.text = j["text"].get<std::string>();
    if (j.contains("language")) {
      if (!j["language"].is_string()) {
        throw ManifestError(where + ": language must be a string");
      }
      c.language = j["language"].get<std::string>();
    }
    clips.push_back(std::move(c));
  }
  return clips;
}

std::vector<const ScenarioSpec*> SelectScenarios(const ScenarioSelector& sel) {
  if (!sel.ids.empty() && sel.arity) {
    throw std::invalid_argument("select scenarios by id or by arity, not both");
  }
  std::vector<const ScenarioSpec*> out;
  if (!sel.ids.empty()) {
    for (const std::string& id : sel.ids) {
      const ScenarioSpec* s = FindScenario(id);
      if (s == nullptr) throw std::invalid_argument("unknown scenario " + id);
      out.push_back(s);
    }
    return out;
  }
  for (const ScenarioSpec& s : EnumerateScenarios()) {
    if (!sel.arity || s.arity() == *sel.arity) out.push_back(&s);
  }
  if (out.empty()) {
    throw std::invalid_argument("no scenario has arity " +
                                std::to_string(*sel.arity));
  }
  return out;
}

std::uint64_t TaskSampleId(std::string_view clip, std::string_view scenario_id,
                           int replica) {
  std::string key(clip);
  key.push_back('\0');
  key.append(scenario_id);
  key.push_back('\0');
  key.append(std::to_string(replica));
  return StableHash(key);
}

ordered_json SummaryToJson(const SynthesisSummary& s) {
  ordered_json j;
  j["written"] = s.written;
  j["skipped"] = s.skipped;
  j["per_scenario"] = s.per_scenario;
  j["skip_reasons"] = s.skip_reasons;
  return j;
}

SynthesisSummary Synthesize(const SynthesisJob& job) {
  if (job.samples_per_clip < 1) {
    throw std::invalid_argument("samples_per_clip must be at least 1");
  }
  if (job.workers < 1) throw std::invalid_argument("workers must be at least 1");

  const std::vector<CleanClip> clips = ReadCleanManifest(job.clean_manifest);
  const std::vector<const ScenarioSpec*> scenarios =
      SelectScenarios(job.scenarios);
  std::vector<MergedChain> merged;
  bool needs_pool = false;
  for (const ScenarioSpec* s : scenarios) {
    merged.push_back(MergeChains(*s));
    needs_pool = needs_pool || NeedsNoisePool(merged.back());
  }
  NoisePool pool;
  if (needs_pool) {
    if (job.noise_dir.empty()) {
      throw std::invalid_argument("selected scenarios need a noise directory");
    }
    pool = NoisePool::FromDirectory(job.noise_dir);
    if (pool.empty()) {
      throw std::invalid_argument("no .wav files under " +
                                  job.noise_dir.string());
    }
  }

  std::error_code ec;
  fs::create_directories(job.output_dir / "audio", ec);
  if (ec) {
    throw std::runtime_error("cannot create " + job.output_dir.string() +
                             ": " + ec.message());
  }

  std::vector<Task> tasks;
  std::vector<std::size_t> scenario_of;
  for (std::size_t c = 0; c < clips.size(); ++c) {
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
      for (int r = 0; r < job.samples_per_clip; ++r) {
        tasks.push_back({c, scenarios[s], r});
        scenario_of.push_back(s);
      }
    }
  }

  std::vector<TaskOutcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      outcomes[i] = RunTask(job, clips, merged, pool, tasks[i],
                            scenario_of[i]);
    }
  };
  const auto n_threads = static_cast<std::size_t>(
      std::min<std::size_t>(job.workers, std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  const fs::path manifest_path = job.output_dir / "manifest.jsonl";
  std::ofstream out(manifest_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + manifest_path.string());

  SynthesisSummary summary;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (outcomes[i].record) {
      out << SerializeRecord(*outcomes[i].record) << '\n';
      ++summary.written;
      ++summary.per_scenario[tasks[i].scenario->id];
    } else {
      ++summary.skipped;
      ++summary.skip_reasons[outcomes[i].skip_reason];
    }
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + manifest_path.string());
  return summary;
}

DegradeResult Degrade(const DegradeRequest& req) {
  const ScenarioSpec* s = FindScenario(req.scenario_id);
  if (s == nullptr) {
    throw std::invalid_argument("unknown scenario " + req.scenario_id);
  }
  if (req.severity && req.latent) {
    throw std::invalid_argument("give a severity or a latent value, not both");
  }
  for (const auto& v : {req.severity, req.latent}) {
    if (v && !(*v >= 0.0 && *v <= 1.0)) {
      throw std::invalid_argument("severity and latent must lie in [0, 1]");
    }
  }

  const MergedChain merged = MergeChains(*s);
  const std::uint64_t sample_id =
      TaskSampleId(req.input.generic_string(), s->id, 0);
  const std::uint64_t stream = SampleStreamSeed(req.profile.seed, sample_id);

  ResolvedChain resolved;
  if (req.severity) {
    resolved = ResolveChainAt(merged, *req.severity,
                              std::numeric_limits<double>::quiet_NaN(), stream);
  } else if (req.latent) {
    resolved = ResolveChainAt(merged, MapSeverity(req.profile, *req.latent),
                              *req.latent, stream);
  } else {
    resolved = InstantiateChain(merged, req.profile, sample_id);
  }

  NoisePool pool;
  if (NeedsNoisePool(resolved)) {
    if (req.noise_dir.empty()) {
      throw std::invalid_argument("scenario " + s->id +
                                  " needs a noise directory");
    }
    pool = NoisePool::FromDirectory(req.noise_dir);
  }

  const Waveform input = ResampleTo(LoadWav(req.input), kCanonicalSampleRate);
  ChainRun run = RunChain(input, resolved, &pool);
  SaveWav(run.audio, req.output);

  ordered_json report;
  report["scenario_id"] = s->id;
  report["severity"] = resolved.severity;
  // No latent draw when severity was given directly.
  report["latent"] = std::isnan(resolved.latent) ? ordered_json(nullptr)
                                                 : ordered_json(resolved.latent);
  report = ProfileMeta(std::move(report), req.profile);
  report["sample_id"] = sample_id;
  report["input"] = req.input.generic_string();
  report["output"] = req.output.generic_string();
  report["chain"] = AppliedChainToJson(run.applied);
  report["clipped"] = AnyClipped(run.applied);
  return {std::move(resolved), std::move(run), std::move(report)};
}

}  // namespace augkit
