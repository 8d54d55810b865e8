// augkit/pipeline/chain_runner.h

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

#ifndef AUGKIT_PIPELINE_CHAIN_RUNNER_H_
#define AUGKIT_PIPELINE_CHAIN_RUNNER_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "augkit/audio/waveform.h"
#include "augkit/scenario/catalog.h"
#include "augkit/severity/severity.h"

namespace augkit {

/// Noise clips available to add_noise, listed in sorted path order so that an
/// index means the same file regardless of directory iteration order.
class NoisePool {
 public:
  NoisePool() = default;
  NoisePool(std::vector<std::filesystem::path> files, int sample_rate);

  /// Every *.wav under `dir`, recursively. Throws std::runtime_error if the
  /// directory cannot be listed.
  static NoisePool FromDirectory(const std::filesystem::path& dir,
                                 int sample_rate = kCanonicalSampleRate);

  std::size_t size() const { return files_.size(); }
  bool empty() const { return files_.empty(); }
  const std::filesystem::path& file(std::size_t i) const { return files_[i]; }

  /// Clip i resampled to the pool rate. Decoded clips are cached; safe to
  /// call from several threads. Throws WavError.
  Waveform Load(std::size_t i) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::size_t, Waveform> clips;
  };

  std::vector<std::filesystem::path> files_;
  int sample_rate_ = kCanonicalSampleRate;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// What one chain step did.
struct AppliedEffect {
  Primitive primitive;
  ParamMap params;
  /// Pool file mixed in by add_noise; empty for white noise.
  std::optional<std::string> noise_file;
  /// Set by the loudness primitives when normalization had to clamp.
  bool clipped = false;
  /// Set by the loudness primitives when the input was unmeasurable.
  bool skipped = false;
};

struct ChainRun {
  Waveform audio;
  std::vector<AppliedEffect> applied;
};

/// True if some step draws noise from the pool rather than synthesizing it.
bool NeedsNoisePool(const ResolvedChain& chain);
bool NeedsNoisePool(const MergedChain& chain);

/// Applies every step of `chain` in order. Stutter and noise selection use
/// substreams of chain.stream_seed. Throws std::invalid_argument on bad
/// parameters, std::runtime_error if a pool clip is needed but `pool` is
/// null or empty, and WavError if a pool clip cannot be read.
ChainRun RunChain(const Waveform& input, const ResolvedChain& chain,
                  const NoisePool* pool);

nlohmann::ordered_json AppliedChainToJson(
    const std::vector<AppliedEffect>& applied);

}  // namespace augkit

#endif  // AUGKIT_PIPELINE_CHAIN_RUNNER_H_
