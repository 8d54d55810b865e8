// augkit/src/effects/stutter.cc

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

Waveform AddStutterReplace(const Waveform& w, const StutterParams& p,
                           RandomStream& rng) {
  if (p.frame_ms <= 0.0) {
    throw std::invalid_argument("AddStutterReplace: frame_ms must be positive");
  }
  if (p.max_repeats < 1) {
    throw std::invalid_argument("AddStutterReplace: max_repeats must be >= 1");
  }
  const auto frame = static_cast<std::size_t>(
      std::max(1L, std::lround(p.frame_ms * w.sample_rate() / 1000.0)));
  if (frame > w.size()) return w;

  const auto x = w.samples();
  std::vector<float> out(x.begin(), x.end());
  // The trailing partial frame, if any, counts as a frame.
  const std::size_t num_frames = (x.size() + frame - 1) / frame;

  std::size_t i = 0;
  while (i < num_frames) {
    if (!rng.Bernoulli(p.stutter_prob)) {
      ++i;
      continue;
    }
    const auto repeats =
        static_cast<std::size_t>(rng.UniformInt(1, p.max_repeats));
    const std::size_t source = i * frame;
    for (std::size_t j = 1; j <= repeats && i + j < num_frames; ++j) {
      const std::size_t begin = (i + j) * frame;
      const std::size_t len = std::min(frame, x.size() - begin);
      if (rng.Bernoulli(p.repeat_prob)) {
        std::copy_n(x.begin() + source, len, out.begin() + begin);
      } else {
        std::fill_n(out.begin() + begin, len, 0.0f);
      }
    }
    i += repeats + 1;
  }
  return Waveform(std::move(out), w.sample_rate());
}

}  // namespace augkit
