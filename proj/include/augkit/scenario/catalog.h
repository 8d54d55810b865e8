// augkit/scenario/catalog.h

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

#ifndef AUGKIT_SCENARIO_CATALOG_H_
#define AUGKIT_SCENARIO_CATALOG_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace augkit {

/// The nine primitive effect names. change_volume and
/// change_volume_distortion run the same algorithm but are distinct for
/// chain merging.
enum class Primitive {
  kAddNoise,
  kAddEcho,
  kAddReverb,
  kAddDistortion,
  kAddResample,
  kApplyFilter,
  kChangeVolume,
  kChangeVolumeDistortion,
  kAddStutterReplace,
};

std::string_view PrimitiveName(Primitive p);
std::optional<Primitive> ParsePrimitive(std::string_view name);

using ParamValue = std::variant<double, std::int64_t, bool, std::string>;
using ParamMap = std::map<std::string, ParamValue, std::less<>>;

/// Which end of a sampled range produces the harder sample.
enum class Harder { kIncreasing, kDecreasing };

enum class ValueKind { kReal, kInteger };

struct SampledRange {
  double low = 0.0;
  double high = 0.0;
  Harder harder = Harder::kIncreasing;
  ValueKind kind = ValueKind::kReal;
  /// Primary severity-controlling parameter of its atomic effect.
  bool core = false;

  friend bool operator==(const SampledRange&, const SampledRange&) = default;
};

/// One primitive effect instance inside an atomic chain.
struct EffectSpec {
  Primitive primitive;
  ParamMap fixed;
  std::map<std::string, SampledRange, std::less<>> sampled;
  /// Ordered easiest to hardest.
  std::map<std::string, std::vector<ParamValue>, std::less<>> choices;

  friend bool operator==(const EffectSpec&, const EffectSpec&) = default;
};

enum class AtomicName {
  kFarField,
  kEchoReverb,
  kObstructed,
  kElectronicDistortion,
  kNoise,
  kRecording,
  kTransmissionDropout,
};

inline constexpr AtomicName kAllAtomicEffects[] = {
    AtomicName::kFarField,  AtomicName::kEchoReverb,
    AtomicName::kObstructed, AtomicName::kElectronicDistortion,
    AtomicName::kNoise,     AtomicName::kRecording,
    AtomicName::kTransmissionDropout,
};

std::string_view AtomicNameString(AtomicName a);
std::optional<AtomicName> ParseAtomicName(std::string_view name);

/// Anchors fix the acoustic geometry; modifiers are portable degradations.
enum class EffectRole { kAnchor, kModifier };

EffectRole RoleOf(AtomicName a);

struct AtomicEffect {
  AtomicName name;
  EffectRole role;
  std::vector<EffectSpec> chain;
};

/// The ordered primitive chain and parameter table of an atomic effect.
AtomicEffect AtomicChain(AtomicName name);
/// Throws std::invalid_argument for an unknown name.
AtomicEffect AtomicChain(std::string_view name);

enum class ScenarioGroup { kSingle, kTwoEffect, kThreeEffect, kHigherOrder };

std::string_view ScenarioGroupName(ScenarioGroup g);

struct ScenarioSpec {
  /// Constituent names joined by '+', anchor first, modifiers sorted.
  std::string id;
  /// Same order as the id; this is also the merge order.
  std::vector<AtomicName> effects;
  ScenarioGroup group;

  int arity() const { return static_cast<int>(effects.size()); }
  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

/// The 54 compound scenarios in a fixed order: 7 single-effect, 18
/// two-effect, 13 three-effect and 16 higher-order.
const std::vector<ScenarioSpec>& EnumerateScenarios();

/// Catalog entry with the given id, or nullptr.
const ScenarioSpec* FindScenario(std::string_view id);

/// Primitive chain of a compound scenario after cross-scene deduplication.
struct MergedChain {
  std::vector<EffectSpec> chain;
  friend bool operator==(const MergedChain&, const MergedChain&) = default;
};

/// Concatenates the atomic chains in order. A primitive is kept if it may be
/// duplicated (add_noise) or if no earlier atomic effect contributed a
/// primitive of the same name; repeats within one atomic effect are kept.
MergedChain MergeChains(const std::vector<AtomicName>& effects);
inline MergedChain MergeChains(const ScenarioSpec& s) {
  return MergeChains(s.effects);
}

}  // namespace augkit

#endif  // AUGKIT_SCENARIO_CATALOG_H_
