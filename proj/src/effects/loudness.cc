// augkit/src/effects/loudness.cc

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

#include <cmath>
#include <vector>

#include "augkit/audio/measure.h"
#include "augkit/effects/effects.h"

namespace augkit {

namespace {

// Residual mismatch below which the correction pass is skipped.
constexpr double kCorrectionToleranceLu = 0.05;

Waveform Scaled(const Waveform& w, double gain_db) {
  const double g = std::pow(10.0, gain_db / 20.0);
  std::vector<float> out(w.samples().begin(), w.samples().end());
  for (float& v : out) v = static_cast<float>(v * g);
  return Waveform(std::move(out), w.sample_rate());
}

Waveform NormalizeLoudness(const Waveform& w, const LoudnessParams& p,
                           VolumeReport* report) {
  VolumeReport local;
  VolumeReport& r = report != nullptr ? *report : local;
  r = VolumeReport{};

  r.measured_lufs = MeasureIntegratedLoudness(w);
  if (!r.measured_lufs) return w;

  r.gain_db = p.target_lufs - *r.measured_lufs;
  bool clipped = false;
  Waveform out = Clamped(Scaled(w, r.gain_db), &clipped);
  r.clipped = clipped;

  const std::optional<double> remeasured = MeasureIntegratedLoudness(out);
  if (remeasured &&
      std::abs(p.target_lufs - *remeasured) > kCorrectionToleranceLu) {
    const double correction = p.target_lufs - *remeasured;
    out = Clamped(Scaled(out, correction), &clipped);
    r.clipped = r.clipped || clipped;
    r.gain_db += correction;
  }
  return out;
}

}  // namespace

Waveform ChangeVolume(const Waveform& w, const LoudnessParams& p,
                      VolumeReport* report) {
  return NormalizeLoudness(w, p, report);
}

Waveform ChangeVolumeDistortion(const Waveform& w, const LoudnessParams& p,
                                VolumeReport* report) {
  return NormalizeLoudness(w, p, report);
}

}  // namespace augkit
