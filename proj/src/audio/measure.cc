// augkit/src/audio/measure.cc

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

#include "augkit/audio/measure.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace augkit {

namespace {

// Direct-form-I biquad, a0 normalized to 1.
struct Biquad {
  double b0, b1, b2, a1, a2;

  void Run(std::vector<double>* x) const {
    double x1 = 0, x2 = 0, y1 = 0, y2 = 0;
    for (double& v : *x) {
      const double y = b0 * v + b1 * x1 + b2 * x2 - a1 * y1 - a2 * y2;
      x2 = x1;
      x1 = v;
      y2 = y1;
      y1 = y;
      v = y;
    }
  }
};

// K-weighting pre-filter (high shelf followed by the RLB high-pass),
// re-derived for an arbitrary sample rate from the analog prototype.
std::vector<double> KWeighted(const Waveform& w) {
  const double rate = w.sample_rate();

  double f0 = 1681.974450955533;
  double gain_db = 3.999843853973347;
  double q = 0.7071752369554196;
  double k = std::tan(std::numbers::pi * f0 / rate);
  const double vh = std::pow(10.0, gain_db / 20.0);
  const double vb = std::pow(vh, 0.4996667741545416);
  double a0 = 1.0 + k / q + k * k;
  const Biquad shelf{(vh + vb * k / q + k * k) / a0, 2.0 * (k * k - vh) / a0,
                     (vh - vb * k / q + k * k) / a0, 2.0 * (k * k - 1.0) / a0,
                     (1.0 - k / q + k * k) / a0};

  f0 = 38.13547087602444;
  q = 0.5003270373238773;
  k = std::tan(std::numbers::pi * f0 / rate);
  a0 = 1.0 + k / q + k * k;
  const Biquad highpass{1.0, -2.0, 1.0, 2.0 * (k * k - 1.0) / a0,
                        (1.0 - k / q + k * k) / a0};

  std::vector<double> x(w.samples().begin(), w.samples().end());
  shelf.Run(&x);
  highpass.Run(&x);
  return x;
}

double BlockLoudness(double mean_square) {
  return -0.691 + 10.0 * std::log10(mean_square);
}

}  // namespace

double MeasureRms(std::span<const float> x) {
  if (x.empty()) throw std::invalid_argument("MeasureRms: empty signal");
  double acc = 0.0;
  for (float v : x) acc += static_cast<double>(v) * v;
  return std::sqrt(acc / static_cast<double>(x.size()));
}

std::optional<double> MeasureIntegratedLoudness(const Waveform& w) {
  using G = LoudnessGating;
  const auto block = static_cast<std::size_t>(
      std::lround(G::kBlockSeconds * w.sample_rate()));
  const auto step = static_cast<std::size_t>(
      std::lround(G::kStepSeconds * w.sample_rate()));
  if (block == 0 || w.size() < block) return std::nullopt;

  const std::vector<double> z = KWeighted(w);
  std::vector<double> prefix(z.size() + 1, 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    prefix[i + 1] = prefix[i] + z[i] * z[i];
  }

  std::vector<double> powers;
  for (std::size_t start = 0; start + block <= z.size(); start += step) {
    double p = (prefix[start + block] - prefix[start]) / block;
    if (p > 0.0 && BlockLoudness(p) > G::kAbsoluteGateLufs) {
      powers.push_back(p);
    }
  }
  if (powers.empty()) return std::nullopt;

  double mean = 0.0;
  for (double p : powers) mean += p;
  mean /= powers.size();
  const double relative_gate = BlockLoudness(mean) + G::kRelativeGateLu;

  double gated = 0.0;
  std::size_t count = 0;
  for (double p : powers) {
    if (BlockLoudness(p) > relative_gate) {
      gated += p;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return BlockLoudness(gated / count);
}

double BandEnergy(const Waveform& w, double low_hz, double high_hz) {
  const std::size_t n = w.size();
  if (n == 0) return 0.0;
  const double rate = w.sample_rate();
  const auto first_bin = static_cast<long>(
      std::max(0.0, std::ceil(low_hz * n / rate)));
  const auto last_bin = static_cast<long>(
      std::min(std::floor(high_hz * n / rate), std::floor(n / 2.0)));

  std::vector<double> xw(n);
  double window_power = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double hann =
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / static_cast<double>(n));
    xw[i] = hann * w[i];
    window_power += hann * hann;
  }

  double energy = 0.0;
  for (long k = first_bin; k <= last_bin; ++k) {
    const double omega = 2.0 * std::numbers::pi * k / static_cast<double>(n);
    const double coeff = 2.0 * std::cos(omega);
    double s1 = 0.0, s2 = 0.0;
    for (double v : xw) {
      const double s = v + coeff * s1 - s2;
      s2 = s1;
      s1 = s;
    }
    energy += s1 * s1 + s2 * s2 - coeff * s1 * s2;
  }
  return 2.0 * energy / (static_cast<double>(n) * window_power);
}

double PowerDb(double power) {
  return 10.0 * std::log10(std::max(power, 1e-30));
}

}  // namespace augkit
