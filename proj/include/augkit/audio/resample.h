// augkit/audio/resample.h

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

#ifndef AUGKIT_AUDIO_RESAMPLE_H_
#define AUGKIT_AUDIO_RESAMPLE_H_

#include "augkit/audio/waveform.h"

namespace augkit {

/// Rational-ratio polyphase resampler with a Kaiser-windowed sinc kernel.
///
/// The kernel spans kZeroCrossings zero crossings of the lower of the two
/// rates on each side (32 taps per phase), uses a Kaiser window with
/// beta = kKaiserBeta, and places its cutoff at kRolloff times the lower
/// Nyquist frequency so that the stopband begins at that Nyquist frequency.
/// Output length is round(len * target / source). target == source returns
/// the input unchanged.
struct ResamplerDesign {
  static constexpr int kZeroCrossings = 16;
  static constexpr double kKaiserBeta = 8.0;
  static constexpr double kRolloff = 0.82;
};

/// Throws std::invalid_argument if target_rate <= 0.
Waveform ResampleTo(const Waveform& w, int target_rate);

}  // namespace augkit

#endif  // AUGKIT_AUDIO_RESAMPLE_H_
