// augkit/src/scenario/catalog.cc

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

#include "augkit/scenario/catalog.h"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <utility>

namespace augkit {

namespace {

constexpr std::array<std::pair<Primitive, std::string_view>, 9>
    kPrimitiveNames = {{
        {Primitive::kAddNoise, "add_noise"},
        {Primitive::kAddEcho, "add_echo"},
        {Primitive::kAddReverb, "add_reverb"},
        {Primitive::kAddDistortion, "add_distortion"},
        {Primitive::kAddResample, "add_resample"},
        {Primitive::kApplyFilter, "apply_filter"},
        {Primitive::kChangeVolume, "change_volume"},
        {Primitive::kChangeVolumeDistortion, "change_volume_distortion"},
        {Primitive::kAddStutterReplace, "add_stutter_replace"},
    }};

constexpr std::array<std::pair<AtomicName, std::string_view>, 7>
    kAtomicNames = {{
        {AtomicName::kFarField, "far_field"},
        {AtomicName::kEchoReverb, "echo_reverb"},
        {AtomicName::kObstructed, "obstructed"},
        {AtomicName::kElectronicDistortion, "electronic_distortion"},
        {AtomicName::kNoise, "noise"},
        {AtomicName::kRecording, "recording"},
        {AtomicName::kTransmissionDropout, "transmission_dropout"},
    }};

constexpr std::array<AtomicName, 3> kAnchors = {
    AtomicName::kFarField, AtomicName::kEchoReverb, AtomicName::kObstructed};
constexpr std::array<AtomicName, 4> kModifiers = {
    AtomicName::kElectronicDistortion, AtomicName::kNoise,
    AtomicName::kRecording, AtomicName::kTransmissionDropout};

// Modifier pairs combined with each anchor in the three-effect group.
const std::array<std::vector<AtomicName>, 3> kAnchorModifierPairs = {{
    {AtomicName::kElectronicDistortion, AtomicName::kNoise},
    {AtomicName::kNoise, AtomicName::kRecording},
    {AtomicName::kNoise, AtomicName::kTransmissionDropout},
}};

SampledRange Up(double lo, double hi, bool core = false) {
  return {lo, hi, Harder::kIncreasing, ValueKind::kReal, core};
}
SampledRange Down(double lo, double hi, bool core = false) {
  return {lo, hi, Harder::kDecreasing, ValueKind::kReal, core};
}
SampledRange UpInt(double lo, double hi) {
  return {lo, hi, Harder::kIncreasing, ValueKind::kInteger, false};
}

// Lower lowpass cutoffs and higher highpass cutoffs remove more speech band.
SampledRange LowpassCutoff(double lo, double hi, bool core) {
  return Down(lo, hi, core);
}
SampledRange HighpassCutoff(double lo, double hi, bool core) {
  return Up(lo, hi, core);
}

EffectSpec FixedVolume(Primitive p, double target_lufs) {
  return {p, {{"target_lufs", target_lufs}}, {}, {}};
}

EffectSpec SampledVolume(Primitive p, double lo, double hi) {
  // Quieter output is harder.
  return {p, {}, {{"target_lufs", Down(lo, hi, true)}}, {}};
}

std::vector<EffectSpec> ChainFor(AtomicName name) {
  using P = Primitive;
  switch (name) {
    case AtomicName::kNoise:
      return {
          {P::kAddNoise,
           {{"noise_category", std::string("filtered_wavs")}, {"wet", 1.0}},
           {{"noise_db", Down(-5, 10, true)}},
           {}},
          FixedVolume(P::kChangeVolume, -23.0),
      };
    case AtomicName::kFarField:
      return {
          {P::kAddReverb,
           {{"dry_level", 0.5}},
           {{"room_size", Up(0.4, 0.6, true)},
            {"damping", Up(0.6, 0.8)},
            {"wet_level", Up(0.4, 0.5)}},
           {}},
          {P::kApplyFilter,
           {{"filter_type", std::string("lowpass")},
            {"repeat", std::int64_t{3}},
            {"wet", 1.0}},
           {{"cutoff_hz", LowpassCutoff(3500, 4500, true)}},
           {}},
          SampledVolume(P::kChangeVolume, -38, -27),
      };
    case AtomicName::kObstructed:
      return {
          {P::kApplyFilter,
           {{"filter_type", std::string("lowpass")}, {"wet", 0.9}},
           {{"cutoff_hz", LowpassCutoff(1500, 2000, true)},
            {"repeat", UpInt(2, 4)}},
           {}},
          {P::kAddReverb,
           {{"room_size", 0.4}, {"damping", 0.9}, {"dry_level", 0.4}},
           {{"wet_level", Up(0.5, 0.7)}},
           {}},
          SampledVolume(P::kChangeVolume, -25, -15),
      };
    case AtomicName::kEchoReverb:
      return {
          {P::kAddReverb,
           {{"damping", 0.5}, {"dry_level", 0.4}},
           {{"room_size", Up(0.8, 0.95, true)}, {"wet_level", Up(0.6, 0.8)}},
           {}},
          {P::kApplyFilter,
           {{"filter_type", std::string("highpass")},
            {"repeat", std::int64_t{1}},
            {"wet", 1.0}},
           {{"cutoff_hz", HighpassCutoff(100, 300, false)}},
           {}},
          {P::kAddEcho,
           {},
           {{"delay_seconds", Up(0.1, 0.3, true)},
            {"feedback", Up(0.3, 0.5)},
            {"mix", Up(0.2, 0.3)}},
           {}},
          SampledVolume(P::kChangeVolume, -30, -23),
      };
    case AtomicName::kRecording:
      return {
          {P::kAddResample,
           {{"target_sr", std::int64_t{8000}},
            {"wet", 1.0},
            {"threshold", 0.4}},
           {{"prob", Up(0.0, 1.0, true)}},
           {}},
          {P::kAddNoise,
           {{"use_white_noise", true}, {"wet", 1.0}},
           {{"noise_db", Down(-5, 10, true)}},
           {}},
          {P::kApplyFilter,
           {{"filter_type", std::string("highpass")}, {"wet", 1.0}},
           {{"cutoff_hz", HighpassCutoff(400, 600, true)},
            {"repeat", UpInt(4, 6)}},
           {}},
          {P::kApplyFilter,
           {{"filter_type", std::string("lowpass")}, {"wet", 1.0}},
           {{"cutoff_hz", LowpassCutoff(3500, 4500, true)},
            {"repeat", UpInt(4, 6)}},
           {}},
          FixedVolume(P::kChangeVolume, -23.0),
      };
    case AtomicName::kElectronicDistortion:
      return {
          {P::kAddDistortion,
           {{"wet", 1.0}},
           {{"drive_db", Up(20, 60, true)}},
           {}},
          {P::kApplyFilter,
           {{"filter_type", std::string("lowpass")},
            {"repeat", std::int64_t{1}},
            {"wet", 1.0}},
           {{"cutoff_hz", LowpassCutoff(2800, 6000, false)}},
           {}},
          SampledVolume(P::kChangeVolumeDistortion, -38, -27),
      };
    case AtomicName::kTransmissionDropout:
      return {
          {P::kAddStutterReplace,
           {{"repeat_prob", 0.7}, {"frame_ms", std::int64_t{20}}},
           {{"stutter_prob", Up(0.05, 0.3, true)},
            {"max_repeats", UpInt(2, 4)}},
           {}},
          FixedVolume(P::kChangeVolume, -23.0),
      };
  }
  throw std::logic_error("unhandled atomic effect");
}

std::string JoinId(const std::vector<AtomicName>& effects) {
  std::string id;
  for (AtomicName a : effects) {
    if (!id.empty()) id += '+';
    id += AtomicNameString(a);
  }
  return id;
}

ScenarioSpec MakeScenario(std::vector<AtomicName> effects, ScenarioGroup g) {
  // Canonical order: the anchor (if any) first, then modifiers by name.
  std::stable_sort(effects.begin(), effects.end(),
                   [](AtomicName a, AtomicName b) {
                     const bool anchor_a = RoleOf(a) == EffectRole::kAnchor;
                     const bool anchor_b = RoleOf(b) == EffectRole::kAnchor;
                     if (anchor_a != anchor_b) return anchor_a;
                     return AtomicNameString(a) < AtomicNameString(b);
                   });
  return {JoinId(effects), std::move(effects), g};
}

// All k-subsets of the modifiers, in lexicographic order of the sorted list.
std::vector<std::vector<AtomicName>> ModifierSubsets(std::size_t k) {
  std::vector<std::vector<AtomicName>> out;
  const std::size_t n = kModifiers.size();
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<AtomicName> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) subset.push_back(kModifiers[i]);
    }
    out.push_back(std::move(subset));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::vector<AtomicName> With(AtomicName anchor, std::vector<AtomicName> mods) {
  mods.insert(mods.begin(), anchor);
  return mods;
}

std::vector<ScenarioSpec> BuildCatalog() {
  std::vector<ScenarioSpec> out;
  using G = ScenarioGroup;

  for (AtomicName a : kAllAtomicEffects) out.push_back(MakeScenario({a}, G::kSingle));

  for (AtomicName anchor : kAnchors) {
    for (AtomicName m : kModifiers) {
      out.push_back(MakeScenario({anchor, m}, G::kTwoEffect));
    }
  }
  for (auto& pair : ModifierSubsets(2)) {
    out.push_back(MakeScenario(pair, G::kTwoEffect));
  }

  for (AtomicName anchor : kAnchors) {
    for (const auto& pair : kAnchorModifierPairs) {
      out.push_back(MakeScenario(With(anchor, pair), G::kThreeEffect));
    }
  }
  for (auto& triple : ModifierSubsets(3)) {
    out.push_back(MakeScenario(triple, G::kThreeEffect));
  }

  for (AtomicName anchor : kAnchors) {
    for (auto& triple : ModifierSubsets(3)) {
      out.push_back(MakeScenario(With(anchor, triple), G::kHigherOrder));
    }
  }
  const std::vector<AtomicName> all_modifiers(kModifiers.begin(),
                                              kModifiers.end());
  out.push_back(MakeScenario(all_modifiers, G::kHigherOrder));
  for (AtomicName anchor : kAnchors) {
    out.push_back(MakeScenario(With(anchor, all_modifiers), G::kHigherOrder));
  }
  return out;
}

}  // namespace

std::string_view PrimitiveName(Primitive p) {
  for (const auto& [value, name] : kPrimitiveNames) {
    if (value == p) return name;
  }
  throw std::logic_error("unhandled primitive");
}

std::optional<Primitive> ParsePrimitive(std::string_view name) {
  for (const auto& [value, n] : kPrimitiveNames) {
    if (n == name) return value;
  }
  return std::nullopt;
}

std::string_view AtomicNameString(AtomicName a) {
  for (const auto& [value, name] : kAtomicNames) {
    if (value == a) return name;
  }
  throw std::logic_error("unhandled atomic effect");
}

std::optional<AtomicName> ParseAtomicName(std::string_view name) {
  for (const auto& [value, n] : kAtomicNames) {
    if (n == name) return value;
  }
  return std::nullopt;
}

EffectRole RoleOf(AtomicName a) {
  return std::find(kAnchors.begin(), kAnchors.end(), a) != kAnchors.end()
             ? EffectRole::kAnchor
             : EffectRole::kModifier;
}

AtomicEffect AtomicChain(AtomicName name) {
  return {name, RoleOf(name), ChainFor(name)};
}

AtomicEffect AtomicChain(std::string_view name) {
  const auto parsed = ParseAtomicName(name);
  if (!parsed) {
    throw std::invalid_argument("unknown atomic effect: " + std::string(name));
  }
  return AtomicChain(*parsed);
}

std::string_view ScenarioGroupName(ScenarioGroup g) {
  switch (g) {
    case ScenarioGroup::kSingle:
      return "single";
    case ScenarioGroup::kTwoEffect:
      return "two_effect";
    case ScenarioGroup::kThreeEffect:
      return "three_effect";
    case ScenarioGroup::kHigherOrder:
      return "higher_order";
  }
  throw std::logic_error("unhandled scenario group");
}

const std::vector<ScenarioSpec>& EnumerateScenarios() {
  static const std::vector<ScenarioSpec> catalog = BuildCatalog();
  return catalog;
}

const ScenarioSpec* FindScenario(std::string_view id) {
  for (const ScenarioSpec& s : EnumerateScenarios()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

MergedChain MergeChains(const std::vector<AtomicName>& effects) {
  MergedChain merged;
  std::set<Primitive> seen;
  for (AtomicName a : effects) {
    std::set<Primitive> current;
    for (EffectSpec& e : ChainFor(a)) {
      if (e.primitive == Primitive::kAddNoise) {
        merged.chain.push_back(std::move(e));
      } else if (!seen.contains(e.primitive)) {
        current.insert(e.primitive);
        merged.chain.push_back(std::move(e));
      }
      // Otherwise a cross-scene duplicate; dropped.
    }
    seen.insert(current.begin(), current.end());
  }
  return merged;
}

}  // namespace augkit
