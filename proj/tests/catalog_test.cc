// augkit/tests/catalog_test.cc

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

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "augkit/scenario/catalog.h"

namespace augkit {
namespace {

std::vector<std::string> Names(const std::vector<EffectSpec>& chain) {
  std::vector<std::string> out;
  for (const EffectSpec& e : chain) out.emplace_back(PrimitiveName(e.primitive));
  return out;
}

// Straightforward restatement of the merge rule used as an oracle.
std::vector<std::string> OracleMerge(const std::vector<AtomicName>& effects) {
  std::vector<std::string> out;
  std::set<std::string> seen_before;
  for (AtomicName a : effects) {
    std::set<std::string> local;
    for (const std::string& name : Names(AtomicChain(a).chain)) {
      if (name == "add_noise" || !seen_before.contains(name)) out.push_back(name);
      local.insert(name);
    }
    seen_before.insert(local.begin(), local.end());
  }
  return out;
}

TEST(PrimitiveTest, NamesRoundTrip) {
  for (int i = 0; i <= static_cast<int>(Primitive::kAddStutterReplace); ++i) {
    const auto p = static_cast<Primitive>(i);
    EXPECT_EQ(ParsePrimitive(PrimitiveName(p)), p);
  }
  EXPECT_FALSE(ParsePrimitive("add_thunder"));
}

TEST(AtomicChainTest, FarFieldChain) {
  EXPECT_EQ(Names(AtomicChain(AtomicName::kFarField).chain),
            (std::vector<std::string>{"add_reverb", "apply_filter", "change_volume"}));
}

TEST(AtomicChainTest, RecordingHasHighpassThenLowpass) {
  const auto chain = AtomicChain("recording").chain;
  EXPECT_EQ(Names(chain),
            (std::vector<std::string>{"add_resample", "add_noise", "apply_filter",
                                      "apply_filter", "change_volume"}));
  EXPECT_EQ(std::get<std::string>(chain[2].fixed.at("filter_type")), "highpass");
  EXPECT_EQ(std::get<std::string>(chain[3].fixed.at("filter_type")), "lowpass");
  EXPECT_TRUE(std::get<bool>(chain[1].fixed.at("use_white_noise")));
}

TEST(AtomicChainTest, TransmissionDropoutFixedValues) {
  const auto chain = AtomicChain(AtomicName::kTransmissionDropout).chain;
  ASSERT_EQ(chain[0].primitive, Primitive::kAddStutterReplace);
  EXPECT_DOUBLE_EQ(std::get<double>(chain[0].fixed.at("repeat_prob")), 0.7);
  EXPECT_EQ(std::get<std::int64_t>(chain[0].fixed.at("frame_ms")), 20);
  const SampledRange& r = chain[0].sampled.at("max_repeats");
  EXPECT_EQ(r.kind, ValueKind::kInteger);
  EXPECT_EQ(r.low, 2);
  EXPECT_EQ(r.high, 4);
}

TEST(AtomicChainTest, NoiseTable) {
  const auto chain = AtomicChain(AtomicName::kNoise).chain;
  const SampledRange& snr = chain[0].sampled.at("noise_db");
  EXPECT_EQ(snr.low, -5);
  EXPECT_EQ(snr.high, 10);
  EXPECT_EQ(snr.harder, Harder::kDecreasing);
  EXPECT_TRUE(snr.core);
  EXPECT_DOUBLE_EQ(std::get<double>(chain[1].fixed.at("target_lufs")), -23.0);
}

TEST(AtomicChainTest, ElectronicDistortionUsesDistinctLoudnessName) {
  EXPECT_EQ(Names(AtomicChain(AtomicName::kElectronicDistortion).chain).back(),
            "change_volume_distortion");
}

TEST(AtomicChainTest, TablesAreWellFormed) {
  for (AtomicName a : kAllAtomicEffects) {
    for (const EffectSpec& e : AtomicChain(a).chain) {
      for (const auto& [key, range] : e.sampled) {
        EXPECT_LE(range.low, range.high) << AtomicNameString(a) << " " << key;
        EXPECT_FALSE(e.fixed.contains(key)) << AtomicNameString(a) << " " << key;
      }
    }
  }
}

TEST(AtomicChainTest, UnknownNameThrows) {
  EXPECT_THROW(AtomicChain("thunderstorm"), std::invalid_argument);
}

TEST(AtomicChainTest, RolesAndNames) {
  int anchors = 0;
  for (AtomicName a : kAllAtomicEffects) {
    EXPECT_EQ(ParseAtomicName(AtomicNameString(a)), a);
    anchors += RoleOf(a) == EffectRole::kAnchor;
  }
  EXPECT_EQ(anchors, 3);
  EXPECT_EQ(RoleOf(AtomicName::kObstructed), EffectRole::kAnchor);
  EXPECT_EQ(RoleOf(AtomicName::kNoise), EffectRole::kModifier);
}

TEST(CatalogTest, GroupSizes) {
  std::map<ScenarioGroup, int> count;
  for (const ScenarioSpec& s : EnumerateScenarios()) ++count[s.group];
  EXPECT_EQ(EnumerateScenarios().size(), 54u);
  EXPECT_EQ(count[ScenarioGroup::kSingle], 7);
  EXPECT_EQ(count[ScenarioGroup::kTwoEffect], 18);
  EXPECT_EQ(count[ScenarioGroup::kThreeEffect], 13);
  EXPECT_EQ(count[ScenarioGroup::kHigherOrder], 16);
}

TEST(CatalogTest, StructuralInvariants) {
  std::set<std::string> ids;
  int anchor_modifier_pairs = 0;
  for (const ScenarioSpec& s : EnumerateScenarios()) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    const int anchors = static_cast<int>(std::count_if(
        s.effects.begin(), s.effects.end(),
        [](AtomicName a) { return RoleOf(a) == EffectRole::kAnchor; }));
    EXPECT_LE(anchors, 1) << s.id;
    if (anchors == 1) {
      EXPECT_EQ(RoleOf(s.effects.front()), EffectRole::kAnchor);
    }
    std::set<AtomicName> unique(s.effects.begin(), s.effects.end());
    EXPECT_EQ(unique.size(), s.effects.size()) << s.id;
    EXPECT_GE(s.arity(), 1);
    EXPECT_LE(s.arity(), 5);
    if (s.arity() == 2 && anchors == 1) ++anchor_modifier_pairs;
    EXPECT_EQ(FindScenario(s.id), &s);
  }
  EXPECT_EQ(anchor_modifier_pairs, 12);
  EXPECT_EQ(FindScenario("far_field+echo_reverb"), nullptr);
}

TEST(CatalogTest, GroupMatchesArity) {
  for (const ScenarioSpec& s : EnumerateScenarios()) {
    const ScenarioGroup expect = s.arity() == 1   ? ScenarioGroup::kSingle
                                 : s.arity() == 2 ? ScenarioGroup::kTwoEffect
                                 : s.arity() == 3 ? ScenarioGroup::kThreeEffect
                                                  : ScenarioGroup::kHigherOrder;
    EXPECT_EQ(s.group, expect) << s.id;
  }
}

TEST(CatalogTest, OrderIsStable) {
  const auto& a = EnumerateScenarios();
  EXPECT_EQ(a.front().id, "far_field");
  EXPECT_EQ(a.back().id,
            "obstructed+electronic_distortion+noise+recording+transmission_dropout");
}

TEST(MergeTest, FarFieldPlusRecording) {
  const MergedChain m = MergeChains(*FindScenario("far_field+recording"));
  EXPECT_EQ(Names(m.chain),
            (std::vector<std::string>{"add_reverb", "apply_filter", "change_volume",
                                      "add_resample", "add_noise"}));
  // The surviving filter keeps the far-field parameters.
  EXPECT_EQ(m.chain[1], AtomicChain(AtomicName::kFarField).chain[1]);
}

TEST(MergeTest, DistortionPlusNoiseKeepsBothLoudnessSteps) {
  const MergedChain m = MergeChains(*FindScenario("electronic_distortion+noise"));
  EXPECT_EQ(Names(m.chain),
            (std::vector<std::string>{"add_distortion", "apply_filter",
                                      "change_volume_distortion", "add_noise",
                                      "change_volume"}));
}

TEST(MergeTest, SingletonIsVerbatim) {
  for (AtomicName a : kAllAtomicEffects) {
    EXPECT_EQ(MergeChains({a}).chain, AtomicChain(a).chain);
  }
}

TEST(MergeTest, ExhaustiveAgainstOracle) {
  for (const ScenarioSpec& s : EnumerateScenarios()) {
    const MergedChain m = MergeChains(s);
    EXPECT_EQ(Names(m.chain), OracleMerge(s.effects)) << s.id;
    EXPECT_EQ(MergeChains(s), m) << s.id;

    std::size_t noise_sources = 0;
    for (AtomicName a : s.effects) {
      const auto names = Names(AtomicChain(a).chain);
      noise_sources += std::count(names.begin(), names.end(), "add_noise");
    }
    const auto merged = Names(m.chain);
    EXPECT_EQ(static_cast<std::size_t>(
                  std::count(merged.begin(), merged.end(), "add_noise")),
              noise_sources)
        << s.id;
  }
}

}  // namespace
}  // namespace augkit
