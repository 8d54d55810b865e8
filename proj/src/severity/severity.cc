// augkit/src/severity/severity.cc

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

#include "augkit/severity/severity.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "augkit/audio/random.h"

namespace augkit {

std::string_view SeverityMappingName(SeverityMapping m) {
  switch (m) {
    case SeverityMapping::kLinear:
      return "linear";
    case SeverityMapping::kSqrtForward:
      return "sqrt-forward";
    case SeverityMapping::kSqrtBackward:
      return "sqrt-backward";
    case SeverityMapping::kGaussianMid:
      return "gaussian-mid";
  }
  throw std::logic_error("unhandled severity mapping");
}

std::optional<SeverityMapping> ParseSeverityMapping(std::string_view name) {
  std::string n(name);
  std::replace(n.begin(), n.end(), '_', '-');
  for (SeverityMapping m :
       {SeverityMapping::kLinear, SeverityMapping::kSqrtForward,
        SeverityMapping::kSqrtBackward, SeverityMapping::kGaussianMid}) {
    if (SeverityMappingName(m) == n) return m;
  }
  return std::nullopt;
}

double MapSeverity(const SeverityProfile& profile, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::out_of_range("MapSeverity: latent " + std::to_string(x) +
                            " outside [0, 1]");
  }
  switch (profile.mapping) {
    case SeverityMapping::kLinear:
      return x;
    case SeverityMapping::kSqrtForward:
      return std::sqrt(x);
    case SeverityMapping::kSqrtBackward:
      return x * x;
    case SeverityMapping::kGaussianMid: {
      if (!(profile.sigma > 0.0)) {
        throw std::invalid_argument("MapSeverity: sigma must be positive");
      }
      const boost::math::normal_distribution<double> normal(0.5,
                                                             profile.sigma);
      return std::clamp(boost::math::quantile(normal, 0.05 + 0.9 * x), 0.0,
                        1.0);
    }
  }
  throw std::logic_error("unhandled severity mapping");
}

double ResolveParam(double low, double high, Harder harder, double m) {
  return harder == Harder::kIncreasing ? low + (high - low) * m
                                       : high - (high - low) * m;
}

double ResolveParam(const SampledRange& range, double m) {
  const double v = ResolveParam(range.low, range.high, range.harder, m);
  if (range.kind == ValueKind::kInteger) {
    return std::clamp(std::round(v), std::ceil(range.low),
                      std::floor(range.high));
  }
  return v;
}

const ParamValue& ResolveChoice(std::span<const ParamValue> options, double m) {
  if (options.empty()) {
    throw std::invalid_argument("ResolveChoice: empty option list");
  }
  const auto n = static_cast<double>(options.size());
  const auto index = static_cast<std::size_t>(
      std::min(std::floor(m * n), n - 1.0));
  return options[index];
}

std::uint64_t SampleStreamSeed(std::uint64_t seed, std::uint64_t sample_id) {
  return DeriveSeed(seed, sample_id);
}

std::uint64_t EffectStreamSeed(std::uint64_t stream_seed, std::size_t position,
                               StreamDomain domain) {
  return DeriveSeed(stream_seed, position, static_cast<std::uint64_t>(domain));
}

double DrawLatent(std::uint64_t stream_seed) {
  RandomStream rng(EffectStreamSeed(stream_seed, 0, StreamDomain::kLatent));
  return rng.Uniform();
}

ResolvedChain ResolveChainAt(const MergedChain& merged, double severity,
                             double latent, std::uint64_t stream_seed) {
  if (!(severity >= 0.0 && severity <= 1.0)) {
    throw std::out_of_range("severity " + std::to_string(severity) +
                            " outside [0, 1]");
  }
  ResolvedChain out;
  out.severity = severity;
  out.latent = latent;
  out.stream_seed = stream_seed;
  for (const EffectSpec& spec : merged.chain) {
    ResolvedEffect e{spec.primitive, spec.fixed};
    for (const auto& [name, range] : spec.sampled) {
      const double v = ResolveParam(range, severity);
      if (range.kind == ValueKind::kInteger) {
        e.params[name] = static_cast<std::int64_t>(v);
      } else {
        e.params[name] = v;
      }
    }
    for (const auto& [name, options] : spec.choices) {
      e.params[name] = ResolveChoice(options, severity);
    }
    out.chain.push_back(std::move(e));
  }
  return out;
}

ResolvedChain InstantiateChain(const MergedChain& merged,
                               const SeverityProfile& profile,
                               std::uint64_t sample_id) {
  const std::uint64_t stream = SampleStreamSeed(profile.seed, sample_id);
  const double x = DrawLatent(stream);
  return ResolveChainAt(merged, MapSeverity(profile, x), x, stream);
}

}  // namespace augkit
