// augkit/src/effects/resample_effect.cc

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

#include <stdexcept>
#include <vector>

#include "augkit/audio/resample.h"
#include "augkit/effects/effects.h"

namespace augkit {

Waveform AddResample(const Waveform& w, const ResampleParams& p) {
  if (p.target_sr <= 0) {
    throw std::invalid_argument("AddResample: target_sr must be positive");
  }
  if (p.prob < p.threshold || p.wet == 0.0 ||
      p.target_sr == w.sample_rate()) {
    return w;
  }

  Waveform narrow = ResampleTo(w, p.target_sr);
  std::vector<float> back = ResampleTo(narrow, w.sample_rate()).release();
  // The round trip can be off by one sample; pad with silence or trim.
  back.resize(w.size(), 0.0f);

  const auto x = w.samples();
  for (std::size_t n = 0; n < back.size(); ++n) {
    back[n] = static_cast<float>((1.0 - p.wet) * x[n] + p.wet * back[n]);
  }
  return Waveform(std::move(back), w.sample_rate());
}

}  // namespace augkit
