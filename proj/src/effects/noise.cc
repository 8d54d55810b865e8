// augkit/src/effects/noise.cc

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
#include <stdexcept>
#include <vector>

#include "augkit/audio/measure.h"
#include "augkit/effects/effects.h"

namespace augkit {

Waveform AddNoise(const Waveform& w, const Waveform& noise,
                  const NoiseParams& p) {
  if (p.wet < 0.0 || p.wet > 1.0) {
    throw std::invalid_argument("AddNoise: wet must be in [0, 1]");
  }
  if (p.wet == 0.0 || w.empty()) return w;
  if (noise.empty()) throw std::invalid_argument("AddNoise: empty noise clip");
  if (noise.sample_rate() != w.sample_rate()) {
    throw std::invalid_argument("AddNoise: noise rate " +
                                std::to_string(noise.sample_rate()) +
                                " differs from speech rate " +
                                std::to_string(w.sample_rate()));
  }

  const double speech_rms = MeasureRms(w);
  if (speech_rms == 0.0) {
    throw std::invalid_argument("AddNoise: silent speech, SNR undefined");
  }

  // Tile, then crop.
  std::vector<float> tiled(w.size());
  const auto src = noise.samples();
  for (std::size_t i = 0; i < tiled.size(); ++i) tiled[i] = src[i % src.size()];

  const double noise_rms = MeasureRms(tiled);
  if (noise_rms == 0.0) {
    throw std::invalid_argument("AddNoise: silent noise clip");
  }
  const double scale =
      p.wet * speech_rms / (noise_rms * std::pow(10.0, p.noise_db / 20.0));

  std::vector<float> out(w.samples().begin(), w.samples().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<float>(out[i] + scale * tiled[i]);
  }
  return Waveform(std::move(out), w.sample_rate());
}

}  // namespace augkit
