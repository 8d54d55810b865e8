// augkit/src/effects/echo.cc

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

Waveform AddEcho(const Waveform& w, const EchoParams& p) {
  if (p.delay_seconds <= 0.0) {
    throw std::invalid_argument("AddEcho: delay_seconds must be positive");
  }
  if (p.feedback < 0.0 || p.feedback >= 1.0) {
    throw std::invalid_argument("AddEcho: feedback must be in [0, 1)");
  }
  if (p.mix == 0.0) return w;

  const auto delay = static_cast<std::size_t>(
      std::max(1L, std::lround(p.delay_seconds * w.sample_rate())));
  const auto x = w.samples();
  std::vector<double> d(x.size(), 0.0);
  for (std::size_t n = delay; n < x.size(); ++n) {
    d[n] = x[n - delay] + p.feedback * d[n - delay];
  }

  std::vector<float> out(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    out[n] = static_cast<float>(std::clamp(x[n] + p.mix * d[n], -1.0, 1.0));
  }
  return Waveform(std::move(out), w.sample_rate());
}

}  // namespace augkit
