// augkit/audio/measure.h

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

#ifndef AUGKIT_AUDIO_MEASURE_H_
#define AUGKIT_AUDIO_MEASURE_H_

#include <optional>
#include <span>

#include "augkit/audio/waveform.h"

namespace augkit {

/// sqrt(mean(x^2)). Throws std::invalid_argument on empty input.
double MeasureRms(std::span<const float> x);
inline double MeasureRms(const Waveform& w) { return MeasureRms(w.samples()); }

/// Loudness gating constants (ITU-R BS.1770-4).
struct LoudnessGating {
  static constexpr double kBlockSeconds = 0.4;
  static constexpr double kStepSeconds = 0.1;  // 75% overlap
  static constexpr double kAbsoluteGateLufs = -70.0;
  static constexpr double kRelativeGateLu = -10.0;
};

/// Integrated loudness of a mono signal in LUFS: K-weighting, 400 ms gating
/// blocks, absolute and relative gates. nullopt when the signal is shorter
/// than one block or every block is gated out.
std::optional<double> MeasureIntegratedLoudness(const Waveform& w);

/// Energy of the Hann-windowed DFT restricted to bins whose centre frequency
/// lies in [low_hz, high_hz], normalized so that a full-scale sine whose
/// frequency lies well inside the band reports ~0.5 (its mean square).
/// Evaluated bin by bin with the Goertzel recurrence, so cost is
/// O(len * bins); meant for analysis of short clips.
double BandEnergy(const Waveform& w, double low_hz, double high_hz);

/// 10*log10 with a floor to keep silence finite.
double PowerDb(double power);

}  // namespace augkit

#endif  // AUGKIT_AUDIO_MEASURE_H_
