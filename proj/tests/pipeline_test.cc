// augkit/tests/pipeline_test.cc

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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include <gtest/gtest.h>

#include "augkit/audio/wav_io.h"
#include "augkit/pipeline/chain_runner.h"
#include "augkit/pipeline/filter_manifest.h"
#include "augkit/pipeline/log.h"
#include "augkit/pipeline/manifest.h"
#include "augkit/pipeline/score_file.h"
#include "augkit/pipeline/synthesize.h"
#include "oracles.h"

namespace augkit {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t CountLines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    SetLogSink(nullptr);
    dir_ = fs::temp_directory_path() /
           ("augkit_pipe_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_ / "clean");
    fs::create_directories(dir_ / "noise");
    for (int i = 0; i < 2; ++i) {
      SaveWav(testing::SpeechLike(1.5, i == 0 ? 16000 : 22050, i),
              dir_ / "clean" / ("utt" + std::to_string(i) + ".wav"));
    }
    for (int i = 0; i < 3; ++i) {
      SaveWav(testing::SpeechLike(0.4, 16000, 100 + i, 0.1),
              dir_ / "noise" / ("n" + std::to_string(i) + ".wav"));
    }
    std::ofstream m(dir_ / "clean.jsonl");
    m << R"({"audio":"clean/utt0.wav","text":"hello there","language":"en"})" << "\n";
    m << R"({"audio":"clean/utt1.wav","text":"你好","language":"zh"})" << "\n";
  }
  void TearDown() override {
    fs::remove_all(dir_);
    SetLogSink(&std::cerr);
  }

  SynthesisJob Job(const std::string& out) const {
    SynthesisJob job;
    job.clean_manifest = dir_ / "clean.jsonl";
    job.noise_dir = dir_ / "noise";
    job.output_dir = dir_ / out;
    job.profile.seed = 17;
    return job;
  }

  fs::path dir_;
};

ManifestRecord SampleRecord() {
  ManifestRecord r;
  r.messages = DefaultMessages();
  r.audios = {"audio/x.wav"};
  r.solution = "the cat";
  r.meta = {{"scenario_id", "noise"}, {"severity", 0.25}};
  return r;
}

TEST(ManifestTest, RoundTrip) {
  ManifestRecord r = SampleRecord();
  EXPECT_EQ(ParseRecord(SerializeRecord(r)), r);
  r.prediction = "the hat";
  r.base_wer = 0.5;
  EXPECT_EQ(ParseRecord(SerializeRecord(r)), r);
  const ordered_json j = RecordToJson(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"messages", "audios", "solution",
                                            "prediction", "base_wer", "meta"}));
}

TEST(ManifestTest, RoundTripProperty) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> ch(0x20, 0x7e), len(1, 20);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    ManifestRecord r = SampleRecord();
    std::string text(len(rng), ' ');
    for (char& c : text) c = static_cast<char>(ch(rng));
    r.solution = text + "中";
    if (trial % 2) {
      r.prediction = text;
      r.base_wer = u(rng);
    }
    r.meta["x"] = u(rng);
    ASSERT_EQ(ParseRecord(SerializeRecord(r)), r);
  }
}

TEST(ManifestTest, InvariantsEnforced) {
  ManifestRecord r = SampleRecord();
  r.audios.push_back("b.wav");
  EXPECT_THROW(ValidateRecord(r), ManifestError);
  r = SampleRecord();
  r.solution.clear();
  EXPECT_THROW(ValidateRecord(r), ManifestError);
  r = SampleRecord();
  r.prediction = "x";
  EXPECT_THROW(ValidateRecord(r), ManifestError);
  EXPECT_THROW(ParseRecord("{}"), ManifestError);
  EXPECT_THROW(ParseRecord("not json"), ManifestError);
}

TEST(FilterTest, BoundaryIsInclusive) {
  std::istringstream in(
      "{\"base_wer\":0.70,\"k\":1}\n{\"base_wer\":0.71}\n{\"base_wer\":0}\n");
  std::ostringstream out;
  SetLogSink(nullptr);
  const FilterSummary s = FilterManifestStream(in, out);
  EXPECT_EQ(out.str(), "{\"base_wer\":0.70,\"k\":1}\n{\"base_wer\":0}\n");
  EXPECT_EQ(s.kept, 2u);
  EXPECT_EQ(s.dropped, 1u);
  EXPECT_EQ(s.rejected, 0u);
}

TEST(FilterTest, EmptyAndRejected) {
  SetLogSink(nullptr);
  std::istringstream empty("");
  std::ostringstream out;
  EXPECT_EQ(FilterManifestStream(empty, out).kept, 0u);
  EXPECT_EQ(out.str(), "");

  std::istringstream bad("{\"a\":1}\n{\"base_wer\":\"high\"}\nnope\n");
  const FilterSummary s = FilterManifestStream(bad, out);
  EXPECT_EQ(s.rejected, 3u);
  EXPECT_EQ(out.str(), "");
}

TEST(FilterTest, HugeThresholdIsIdentity) {
  std::string text;
  for (int i = 0; i < 20; ++i) {
    ManifestRecord r = SampleRecord();
    r.prediction = "p";
    r.base_wer = i * 0.37;
    text += SerializeRecord(r) + "\n";
  }
  std::istringstream in(text);
  std::ostringstream out;
  FilterManifestStream(in, out, 1e9);
  EXPECT_EQ(out.str(), text);
}

TEST(ScoreFileTest, ExactMatchesAndErrors) {
  SetLogSink(nullptr);
  std::istringstream in(
      "{\"hypothesis\":\"A b\",\"reference\":\"a b\"}\n"
      "\n"
      "{\"hypothesis\":\"x\"}\n"
      "{\"hypothesis\":\"我爱你\",\"reference\":\"我爱你\",\"language\":\"zh\"}\n");
  std::ostringstream out;
  const ScoreSummary s = ScoreStream(in, out, RewardConfig{});
  EXPECT_EQ(s.rows, 3u);
  EXPECT_EQ(s.scored, 2u);
  EXPECT_EQ(s.failed, 1u);
  EXPECT_EQ(s.mean_r_total, 1.0);
  EXPECT_EQ(s.mean_wer, 0.0);
  std::istringstream lines(out.str());
  std::string line;
  std::vector<ordered_json> rows;
  while (std::getline(lines, line)) rows.push_back(ordered_json::parse(line));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1]["index"], 1);
  EXPECT_TRUE(rows[1].contains("error"));
  EXPECT_EQ(rows[2]["n_correct"], 3);
}

TEST(ScoreFileTest, WorkedExampleThroughStream) {
  std::istringstream in(
      "{\"hypothesis\":\"the cat sat\",\"reference\":\"the cat sat on the mat\"}\n");
  std::ostringstream out;
  ScoreStream(in, out, RewardConfig{});
  const ordered_json row = ordered_json::parse(out.str());
  EXPECT_NEAR(row["r_struc"].get<double>(), 0.5, 1e-12);
  EXPECT_NEAR(row["wer"].get<double>(), 0.5, 1e-12);
}

TEST(ScoreFileTest, EmptyInput) {
  std::istringstream in("");
  std::ostringstream out;
  const ScoreSummary s = ScoreStream(in, out, RewardConfig{});
  EXPECT_EQ(s.rows, 0u);
  EXPECT_EQ(out.str(), "");
}

TEST_F(PipelineTest, NoisePoolIsSortedAndCached) {
  const NoisePool pool = NoisePool::FromDirectory(dir_ / "noise");
  ASSERT_EQ(pool.size(), 3u);
  EXPECT_EQ(pool.file(0).filename(), "n0.wav");
  EXPECT_EQ(pool.file(2).filename(), "n2.wav");
  EXPECT_EQ(pool.Load(1), pool.Load(1));
  EXPECT_THROW(NoisePool::FromDirectory(dir_ / "missing"), std::runtime_error);
}

TEST_F(PipelineTest, RunChainNeedsPoolForNoise) {
  const ResolvedChain chain =
      ResolveChainAt(MergeChains({AtomicName::kNoise}), 0.5, 0.5, 1);
  EXPECT_TRUE(NeedsNoisePool(chain));
  const Waveform w = testing::SpeechLike(1.0, 16000, 1);
  EXPECT_THROW(RunChain(w, chain, nullptr), std::runtime_error);
  const NoisePool pool = NoisePool::FromDirectory(dir_ / "noise");
  const ChainRun run = RunChain(w, chain, &pool);
  EXPECT_EQ(run.audio.size(), w.size());
  ASSERT_TRUE(run.applied[0].noise_file.has_value());
}

TEST_F(PipelineTest, WhiteNoiseChainIsDeterministic) {
  const ResolvedChain chain =
      ResolveChainAt(MergeChains({AtomicName::kRecording}), 0.7, 0.7, 42);
  EXPECT_FALSE(NeedsNoisePool(chain));
  const Waveform w = testing::SpeechLike(1.0, 16000, 2);
  EXPECT_EQ(RunChain(w, chain, nullptr).audio, RunChain(w, chain, nullptr).audio);
}

TEST_F(PipelineTest, SynthesizeCountsAndLayout) {
  SynthesisJob job = Job("out");
  job.scenarios.ids = {"noise", "far_field+recording", "recording"};
  const SynthesisSummary s = Synthesize(job);
  EXPECT_EQ(s.written, 6u);
  EXPECT_EQ(s.skipped, 0u);
  EXPECT_EQ(s.per_scenario.at("noise"), 2u);

  const std::string manifest = ReadFile(job.output_dir / "manifest.jsonl");
  EXPECT_EQ(CountLines(manifest), 6u);
  std::istringstream lines(manifest);
  std::string line;
  while (std::getline(lines, line)) {
    const ManifestRecord r = ParseRecord(line);
    EXPECT_EQ(SerializeRecord(r), line);
    const Waveform out = LoadWav(job.output_dir / r.audios[0]);
    EXPECT_EQ(out.sample_rate(), kCanonicalSampleRate);
    // 1.5 s at either source rate becomes 24000 samples at 16 kHz.
    EXPECT_EQ(out.size(), 24000u);
    for (const char* key : {"scenario_id", "severity", "latent", "seed",
                            "language", "chain", "sample_id"}) {
      EXPECT_TRUE(r.meta.contains(key)) << key;
    }
  }
  EXPECT_EQ(CountLines(ReadFile(job.output_dir / "manifest.jsonl")), 6u);
}

TEST_F(PipelineTest, SynthesizeIsReproducible) {
  SynthesisJob a = Job("a");
  a.scenarios.arity = 2;
  a.workers = 1;
  SynthesisJob b = Job("b");
  b.scenarios.arity = 2;
  b.workers = 5;
  Synthesize(a);
  Synthesize(b);
  EXPECT_EQ(ReadFile(a.output_dir / "manifest.jsonl"),
            ReadFile(b.output_dir / "manifest.jsonl"));
  for (const auto& e : fs::directory_iterator(a.output_dir / "audio")) {
    EXPECT_EQ(ReadFile(e.path()),
              ReadFile(b.output_dir / "audio" / e.path().filename()));
  }
}

TEST_F(PipelineTest, ArityOneUsesSevenScenarios) {
  SynthesisJob job = Job("single");
  job.scenarios.arity = 1;
  EXPECT_EQ(SelectScenarios(job.scenarios).size(), 7u);
  const SynthesisSummary s = Synthesize(job);
  EXPECT_EQ(s.per_scenario.size(), 7u);
  EXPECT_EQ(s.written, 14u);
}

TEST_F(PipelineTest, MissingClipIsSkippedNotFatal) {
  std::ofstream(dir_ / "clean.jsonl", std::ios::app)
      << R"({"audio":"clean/gone.wav","text":"lost"})" << "\n";
  SynthesisJob job = Job("skip");
  job.scenarios.ids = {"far_field"};
  job.samples_per_clip = 2;
  const SynthesisSummary s = Synthesize(job);
  EXPECT_EQ(s.written, 4u);
  EXPECT_EQ(s.skipped, 2u);
  EXPECT_EQ(s.skip_reasons.at("unreadable_audio"), 2u);
}

TEST_F(PipelineTest, InvalidJobs) {
  SynthesisJob job = Job("bad");
  job.scenarios.ids = {"not_a_scenario"};
  EXPECT_THROW(Synthesize(job), std::invalid_argument);
  job = Job("bad");
  job.scenarios.ids = {"noise"};
  job.noise_dir.clear();
  EXPECT_THROW(Synthesize(job), std::invalid_argument);
  job = Job("bad");
  job.samples_per_clip = 0;
  EXPECT_THROW(Synthesize(job), std::invalid_argument);
  job = Job("bad");
  job.scenarios.ids = {"noise"};
  job.scenarios.arity = 1;
  EXPECT_THROW(Synthesize(job), std::invalid_argument);
}

TEST_F(PipelineTest, DegradeEasiestNoiseIsTenDb) {
  DegradeRequest req;
  req.input = dir_ / "clean" / "utt0.wav";
  req.output = dir_ / "d1.wav";
  req.scenario_id = "noise";
  req.severity = 0.0;
  req.noise_dir = dir_ / "noise";
  const DegradeResult r = Degrade(req);
  EXPECT_EQ(std::get<double>(r.resolved.chain[0].params.at("noise_db")), 10.0);
  EXPECT_TRUE(r.report["latent"].is_null());

  req.output = dir_ / "d2.wav";
  Degrade(req);
  EXPECT_EQ(ReadFile(dir_ / "d1.wav"), ReadFile(dir_ / "d2.wav"));

  req.scenario_id = "thunder";
  EXPECT_THROW(Degrade(req), std::invalid_argument);
}

TEST_F(PipelineTest, DegradeLatentGoesThroughMapping) {
  DegradeRequest req;
  req.input = dir_ / "clean" / "utt0.wav";
  req.output = dir_ / "d.wav";
  req.scenario_id = "far_field";
  req.latent = 0.25;
  req.profile.mapping = SeverityMapping::kSqrtForward;
  EXPECT_EQ(Degrade(req).resolved.severity, 0.5);
  req.severity = 0.3;
  EXPECT_THROW(Degrade(req), std::invalid_argument);
}

}  // namespace
}  // namespace augkit
