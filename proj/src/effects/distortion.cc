// augkit/src/effects/distortion.cc

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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "augkit/effects/effects.h"

namespace augkit {

Waveform AddDistortion(const Waveform& w, const DistortionParams& p) {
  if (p.drive_db < 0.0) {
    throw std::invalid_argument("AddDistortion: drive_db must be >= 0");
  }
  if (p.wet == 0.0) return w;

  const double drive = std::pow(10.0, p.drive_db / 20.0);
  std::vector<float> out(w.size());
  const auto x = w.samples();
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double y = std::clamp(std::tanh(drive * x[n]), -1.0, 1.0);
    out[n] = static_cast<float>((1.0 - p.wet) * x[n] + p.wet * y);
  }
  return Waveform(std::move(out), w.sample_rate());
}

}  // namespace augkit
