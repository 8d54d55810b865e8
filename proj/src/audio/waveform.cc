// augkit/src/audio/waveform.cc

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

#include "augkit/audio/waveform.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace augkit {

Waveform::Waveform(std::vector<float> samples, int sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (sample_rate <= 0) {
    throw std::invalid_argument("Waveform: sample rate must be positive, got " +
                                std::to_string(sample_rate));
  }
}

bool AllFinite(const Waveform& w) {
  return std::all_of(w.samples().begin(), w.samples().end(),
                     [](float x) { return std::isfinite(x); });
}

Waveform Clamped(Waveform w, bool* clipped) {
  bool any = false;
  for (float& x : w.mutable_samples()) {
    if (x > 1.0f) {
      x = 1.0f;
      any = true;
    } else if (x < -1.0f) {
      x = -1.0f;
      any = true;
    }
  }
  if (clipped != nullptr) *clipped = any;
  return w;
}

}  // namespace augkit
