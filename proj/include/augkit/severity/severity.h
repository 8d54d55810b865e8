// augkit/severity/severity.h

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

#ifndef AUGKIT_SEVERITY_SEVERITY_H_
#define AUGKIT_SEVERITY_SEVERITY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "augkit/scenario/catalog.h"

namespace augkit {

/// How a uniform latent draw x is turned into the global severity m.
enum class SeverityMapping {
  kLinear,        // m = x
  kSqrtForward,   // m = sqrt(x), biased towards hard samples
  kSqrtBackward,  // m = x^2, biased towards easy samples
  kGaussianMid,   // m = clip(Phi^-1(0.05 + 0.9 x; 0.5, sigma), 0, 1)
};

std::string_view SeverityMappingName(SeverityMapping m);
/// Accepts both "sqrt-forward" and "sqrt_forward" spellings.
std::optional<SeverityMapping> ParseSeverityMapping(std::string_view name);

struct SeverityProfile {
  SeverityMapping mapping = SeverityMapping::kLinear;
  /// Spread of the gaussian-mid mapping; ignored by the others.
  double sigma = 0.25;
  std::uint64_t seed = 0;
};

/// Throws std::out_of_range if x is outside [0, 1] and std::invalid_argument
/// if sigma <= 0 under gaussian-mid.
double MapSeverity(const SeverityProfile& profile, double x);

/// a + (b - a) m when larger values are harder, b - (b - a) m otherwise.
double ResolveParam(double low, double high, Harder harder, double m);
/// As above, rounding integer-valued ranges to the nearest integer.
double ResolveParam(const SampledRange& range, double m);

/// options[min(floor(m * n), n - 1)]; options are ordered easiest first.
/// Throws std::invalid_argument on an empty list.
const ParamValue& ResolveChoice(std::span<const ParamValue> options, double m);

struct ResolvedEffect {
  Primitive primitive;
  ParamMap params;
  friend bool operator==(const ResolvedEffect&, const ResolvedEffect&) = default;
};

/// A merged chain with every sampled and categorical parameter fixed by one
/// shared severity.
struct ResolvedChain {
  std::vector<ResolvedEffect> chain;
  double severity = 0.0;
  double latent = 0.0;
  /// Per-sample seed; effect-level random streams derive from it.
  std::uint64_t stream_seed = 0;

  friend bool operator==(const ResolvedChain&, const ResolvedChain&) = default;
};

/// Domain separators for substreams derived from a sample's stream seed.
enum class StreamDomain : std::uint64_t {
  kLatent = 0,
  kStutter = 1,
  kNoisePick = 2,
  kWhiteNoise = 3,
};

/// Seed of the substream owned by `sample_id`.
std::uint64_t SampleStreamSeed(std::uint64_t seed, std::uint64_t sample_id);

/// Seed for effect `position` of a chain in the given domain.
std::uint64_t EffectStreamSeed(std::uint64_t stream_seed, std::size_t position,
                               StreamDomain domain);

/// Latent draw x in [0, 1) for a sample.
double DrawLatent(std::uint64_t stream_seed);

/// Resolves every parameter of `merged` with the given severity.
ResolvedChain ResolveChainAt(const MergedChain& merged, double severity,
                             double latent, std::uint64_t stream_seed);

/// Draws x from the sample's substream, maps it to m once, and resolves the
/// whole chain with that m. Pure in (merged, profile, sample_id).
ResolvedChain InstantiateChain(const MergedChain& merged,
                               const SeverityProfile& profile,
                               std::uint64_t sample_id);

}  // namespace augkit

#endif  // AUGKIT_SEVERITY_SEVERITY_H_
