// augkit/src/effects/filter.cc

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
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "augkit/effects/effects.h"

namespace augkit {

Waveform ApplyFilter(const Waveform& w, const FilterParams& p) {
  const double nyquist = w.sample_rate() / 2.0;
  if (!(p.cutoff_hz > 0.0 && p.cutoff_hz < nyquist)) {
    throw std::invalid_argument("ApplyFilter: cutoff " +
                                std::to_string(p.cutoff_hz) +
                                " Hz outside (0, " + std::to_string(nyquist) +
                                ") Hz");
  }
  if (p.repeat < 1) {
    throw std::invalid_argument("ApplyFilter: repeat must be >= 1");
  }
  if (p.wet == 0.0) return w;

  // Butterworth biquad via the bilinear transform (Q = 1/sqrt(2)).
  const double w0 = 2.0 * std::numbers::pi * p.cutoff_hz / w.sample_rate();
  const double cosw = std::cos(w0);
  const double alpha = std::sin(w0) / std::numbers::sqrt2;
  const double a0 = 1.0 + alpha;
  double b0, b1, b2;
  if (p.filter_type == FilterType::kLowpass) {
    b0 = (1.0 - cosw) / 2.0;
    b1 = 1.0 - cosw;
    b2 = b0;
  } else {
    b0 = (1.0 + cosw) / 2.0;
    b1 = -(1.0 + cosw);
    b2 = b0;
  }
  b0 /= a0;
  b1 /= a0;
  b2 /= a0;
  const double a1 = -2.0 * cosw / a0;
  const double a2 = (1.0 - alpha) / a0;

  std::vector<double> y(w.samples().begin(), w.samples().end());
  for (int pass = 0; pass < p.repeat; ++pass) {
    double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
    for (double& v : y) {
      const double out = b0 * v + b1 * x1 + b2 * x2 - a1 * y1 - a2 * y2;
      x2 = x1;
      x1 = v;
      y2 = y1;
      y1 = out;
      v = out;
    }
  }

  const auto x = w.samples();
  std::vector<float> out(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    out[n] = static_cast<float>((1.0 - p.wet) * x[n] + p.wet * y[n]);
  }
  return Waveform(std::move(out), w.sample_rate());
}

}  // namespace augkit
