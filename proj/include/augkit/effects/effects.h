// augkit/effects/effects.h

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

// Primitive acoustic effects. Every function is a pure transformation of its
// inputs and returns a waveform of the same length and sample rate as `w`.
// Where an effect has a wet or mix control, wet = 0 returns the input
// bit-for-bit. Parameter structs are validated on use; violations throw
// std::invalid_argument.

#ifndef AUGKIT_EFFECTS_EFFECTS_H_
#define AUGKIT_EFFECTS_EFFECTS_H_

#include <optional>

#include "augkit/audio/random.h"
#include "augkit/audio/waveform.h"

namespace augkit {

struct NoiseParams {
  /// Speech-to-noise RMS ratio in dB. Higher is cleaner.
  double noise_db = 10.0;
  double wet = 1.0;
};

struct EchoParams {
  double delay_seconds = 0.1;
  double feedback = 0.3;  // must stay below 1
  double mix = 0.2;
};

struct ReverbParams {
  double room_size = 0.5;
  double damping = 0.5;
  double wet_level = 0.33;
  double dry_level = 0.4;
};

struct DistortionParams {
  double drive_db = 20.0;
  double wet = 1.0;
};

struct ResampleParams {
  int target_sr = 8000;
  double wet = 1.0;
  /// Severity-resolved gate value; the effect applies iff prob >= threshold.
  double prob = 1.0;
  double threshold = 0.4;
};

enum class FilterType { kLowpass, kHighpass };

struct FilterParams {
  FilterType filter_type = FilterType::kLowpass;
  double cutoff_hz = 4000.0;
  int repeat = 1;
  double wet = 1.0;
};

struct LoudnessParams {
  double target_lufs = -23.0;
};

struct StutterParams {
  double frame_ms = 20.0;
  double stutter_prob = 0.1;
  double repeat_prob = 0.7;
  int max_repeats = 2;
};

/// Tiles/crops `noise` to the length of `w`, scales it so that
/// rms(w) / rms(scaled noise) = 10^(noise_db / 20), and returns
/// w + wet * scaled_noise. Rates must match. Throws std::invalid_argument on
/// rate mismatch, empty or silent noise, and silent speech (SNR undefined).
Waveform AddNoise(const Waveform& w, const Waveform& noise,
                  const NoiseParams& p);

/// Feedback delay line d[n] = x[n-D] + feedback * d[n-D] with
/// D = round(delay_seconds * rate); output x + mix * d, clamped to [-1, 1].
Waveform AddEcho(const Waveform& w, const EchoParams& p);

/// Mono Freeverb: eight damped feedback combs in parallel followed by four
/// series allpasses. Output dry_level * x + wet_level * reverb(x).
Waveform AddReverb(const Waveform& w, const ReverbParams& p);

/// y = clamp(tanh(10^(drive_db/20) * x)); output (1 - wet) x + wet y.
Waveform AddDistortion(const Waveform& w, const DistortionParams& p);

/// Band-limits by resampling to target_sr and back, then mixes with wet.
/// Identity when prob < threshold or target_sr equals the input rate.
Waveform AddResample(const Waveform& w, const ResampleParams& p);

/// Second-order Butterworth section cascaded `repeat` times, crossfaded with
/// the input by wet. Throws if cutoff is not inside (0, rate/2).
Waveform ApplyFilter(const Waveform& w, const FilterParams& p);

struct VolumeReport {
  /// Integrated loudness before processing; empty if unmeasurable.
  std::optional<double> measured_lufs;
  double gain_db = 0.0;
  bool clipped = false;
};

/// Normalizes integrated loudness to target_lufs with one correction pass.
/// Unmeasurable input (too short or silent) is returned unchanged.
Waveform ChangeVolume(const Waveform& w, const LoudnessParams& p,
                      VolumeReport* report = nullptr);

/// Same algorithm as ChangeVolume. Kept as a separate entry point because
/// chain merging treats the two as different primitives.
Waveform ChangeVolumeDistortion(const Waveform& w, const LoudnessParams& p,
                                VolumeReport* report = nullptr);

/// Frame-level stutter. Frames are scanned in order; an untouched frame
/// triggers an event with probability stutter_prob, after which the next
/// r ~ U{1..max_repeats} frames are each replaced by a copy of the triggering
/// frame (probability repeat_prob) or by silence. Replaced frames are not
/// scanned. A frame longer than the input makes this the identity.
Waveform AddStutterReplace(const Waveform& w, const StutterParams& p,
                           RandomStream& rng);

}  // namespace augkit

#endif  // AUGKIT_EFFECTS_EFFECTS_H_
