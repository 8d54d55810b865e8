// augkit/audio/waveform.h

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

#ifndef AUGKIT_AUDIO_WAVEFORM_H_
#define AUGKIT_AUDIO_WAVEFORM_H_

#include <cstddef>
#include <span>
#include <vector>

namespace augkit {

/// Canonical processing rate of the synthesis pipeline.
inline constexpr int kCanonicalSampleRate = 16000;

/// Mono sample buffer tagged with its sample rate. Amplitudes are nominally in
/// [-1, 1]; effects that can overshoot clamp explicitly.
class Waveform {
 public:
  Waveform() = default;
  /// Throws std::invalid_argument if sample_rate <= 0.
  Waveform(std::vector<float> samples, int sample_rate);

  std::span<const float> samples() const { return samples_; }
  std::span<float> mutable_samples() { return samples_; }
  /// Moves the buffer out, leaving this waveform empty.
  std::vector<float> release() { return std::move(samples_); }

  int sample_rate() const { return sample_rate_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  double duration_seconds() const {
    return static_cast<double>(samples_.size()) / sample_rate_;
  }

  float operator[](std::size_t i) const { return samples_[i]; }

  friend bool operator==(const Waveform&, const Waveform&) = default;

 private:
  std::vector<float> samples_;
  int sample_rate_ = kCanonicalSampleRate;
};

/// True if every sample is finite.
bool AllFinite(const Waveform& w);

/// Same rate, samples clamped to [-1, 1]. Returns true through `clipped` if
/// any sample was out of range.
Waveform Clamped(Waveform w, bool* clipped = nullptr);

}  // namespace augkit

#endif  // AUGKIT_AUDIO_WAVEFORM_H_
