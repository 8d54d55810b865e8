// augkit/audio/random.h

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

#ifndef AUGKIT_AUDIO_RANDOM_H_
#define AUGKIT_AUDIO_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace augkit {

/// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

/// Seed of an independent substream for (seed, id) in a given domain.
/// Pure; the same triple always yields the same value.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t id,
                         std::uint64_t domain = 0);

/// 64-bit FNV-1a, stable across platforms and runs.
std::uint64_t StableHash(std::string_view s);

/// Deterministic random stream. The engine is mt19937_64, whose output
/// sequence is fixed by the standard; the conversions below are written out
/// rather than taken from <random> distributions, whose algorithms vary
/// between standard library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 bits of resolution.
  double Uniform();
  /// Uniform integer in [lo, hi], lo <= hi.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);
  /// True with probability p.
  bool Bernoulli(double p) { return Uniform() < p; }
  /// Standard normal via Box-Muller (one value per call).
  double Gaussian();

 private:
  std::mt19937_64 engine_;
};

}  // namespace augkit

#endif  // AUGKIT_AUDIO_RANDOM_H_
