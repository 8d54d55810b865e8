// augkit/src/audio/resample.cc

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

#include "augkit/audio/resample.h"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace augkit {

namespace {

double Sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

double Kaiser(double t, double half_width, double beta) {
  const double r = t / half_width;
  if (r <= -1.0 || r >= 1.0) return 0.0;
  return std::cyl_bessel_i(0.0, beta * std::sqrt(1.0 - r * r)) /
         std::cyl_bessel_i(0.0, beta);
}

// One row of taps per output phase. Row p holds the kernel evaluated at the
// fractional input position p / num_phases, for input offsets
// [-taps/2 + 1, taps/2].
struct PolyphaseBank {
  std::int64_t num_phases = 0;
  int taps = 0;
  std::vector<double> coeffs;  // num_phases * taps

  const double* row(std::int64_t phase) const {
    return coeffs.data() + phase * taps;
  }
};

PolyphaseBank DesignBank(int source_rate, int target_rate,
                         std::int64_t num_phases) {
  using D = ResamplerDesign;
  const int lower = std::min(source_rate, target_rate);
  // Kernel bandwidth and extent measured in input samples.
  const double bandwidth = D::kRolloff * lower / source_rate;
  const double half_width =
      static_cast<double>(D::kZeroCrossings) * source_rate / lower;
  const int half_taps = static_cast<int>(std::ceil(half_width));

  PolyphaseBank bank;
  bank.num_phases = num_phases;
  bank.taps = 2 * half_taps;
  bank.coeffs.resize(static_cast<std::size_t>(num_phases) * bank.taps);
  for (std::int64_t p = 0; p < num_phases; ++p) {
    const double frac = static_cast<double>(p) / num_phases;
    double* row = bank.coeffs.data() + p * bank.taps;
    double sum = 0.0;
    for (int j = 0; j < bank.taps; ++j) {
      // Input index base - half_taps + 1 + j sits at distance t from the
      // output instant base + frac.
      const double t = frac + half_taps - 1 - j;
      row[j] = bandwidth * Sinc(bandwidth * t) *
               Kaiser(t, half_width, D::kKaiserBeta);
      sum += row[j];
    }
    // Unity DC gain for every phase.
    for (int j = 0; j < bank.taps; ++j) row[j] /= sum;
  }
  return bank;
}

}  // namespace

Waveform ResampleTo(const Waveform& w, int target_rate) {
  if (target_rate <= 0) {
    throw std::invalid_argument("ResampleTo: target rate must be positive, got " +
                                std::to_string(target_rate));
  }
  const int source_rate = w.sample_rate();
  if (target_rate == source_rate) return w;

  const std::int64_t g = std::gcd(source_rate, target_rate);
  const std::int64_t up = target_rate / g;
  const std::int64_t down = source_rate / g;
  const std::int64_t in_len = static_cast<std::int64_t>(w.size());
  const std::int64_t out_len =
      (in_len * target_rate + source_rate / 2) / source_rate;

  const PolyphaseBank bank = DesignBank(source_rate, target_rate, up);
  const int half_taps = bank.taps / 2;
  const auto in = w.samples();

  std::vector<float> out(static_cast<std::size_t>(out_len));
  for (std::int64_t n = 0; n < out_len; ++n) {
    const std::int64_t pos = n * down;
    const std::int64_t base = pos / up;
    const std::int64_t phase = pos % up;
    const double* row = bank.row(phase);
    const std::int64_t first = base - half_taps + 1;
    double acc = 0.0;
    for (int j = 0; j < bank.taps; ++j) {
      const std::int64_t k = first + j;
      if (k < 0 || k >= in_len) continue;
      acc += row[j] * in[static_cast<std::size_t>(k)];
    }
    out[static_cast<std::size_t>(n)] = static_cast<float>(acc);
  }
  return Waveform(std::move(out), target_rate);
}

}  // namespace augkit
