// augkit/src/effects/reverb.cc

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
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "augkit/effects/effects.h"

namespace augkit {

namespace {

// Freeverb tuning, in samples at 44.1 kHz.
constexpr std::array<int, 8> kCombTuning = {1116, 1188, 1277, 1356,
                                            1422, 1491, 1557, 1617};
constexpr std::array<int, 4> kAllpassTuning = {556, 441, 341, 225};
constexpr double kTuningRate = 44100.0;
constexpr double kFixedGain = 0.015;
constexpr double kScaleWet = 3.0;
constexpr double kScaleDamp = 0.4;
constexpr double kScaleRoom = 0.28;
constexpr double kOffsetRoom = 0.7;
constexpr double kAllpassFeedback = 0.5;

class Comb {
 public:
  Comb(std::size_t size, double feedback, double damp)
      : buffer_(size, 0.0), feedback_(feedback), damp1_(damp),
        damp2_(1.0 - damp) {}

  double Process(double input) {
    const double output = buffer_[index_];
    filter_store_ = output * damp2_ + filter_store_ * damp1_;
    buffer_[index_] = input + filter_store_ * feedback_;
    if (++index_ == buffer_.size()) index_ = 0;
    return output;
  }

 private:
  std::vector<double> buffer_;
  std::size_t index_ = 0;
  double feedback_;
  double damp1_;
  double damp2_;
  double filter_store_ = 0.0;
};

class Allpass {
 public:
  explicit Allpass(std::size_t size) : buffer_(size, 0.0) {}

  double Process(double input) {
    const double buffered = buffer_[index_];
    buffer_[index_] = input + buffered * kAllpassFeedback;
    if (++index_ == buffer_.size()) index_ = 0;
    return buffered - input;
  }

 private:
  std::vector<double> buffer_;
  std::size_t index_ = 0;
};

std::size_t ScaledLength(int tuning, int rate) {
  return static_cast<std::size_t>(
      std::max(1L, std::lround(tuning * rate / kTuningRate)));
}

void CheckUnit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string("AddReverb: ") + name +
                                " must be in [0, 1]");
  }
}

}  // namespace

Waveform AddReverb(const Waveform& w, const ReverbParams& p) {
  CheckUnit(p.room_size, "room_size");
  CheckUnit(p.damping, "damping");
  CheckUnit(p.wet_level, "wet_level");
  CheckUnit(p.dry_level, "dry_level");
  if (p.wet_level == 0.0 && p.dry_level == 1.0) return w;

  const double feedback = kOffsetRoom + kScaleRoom * p.room_size;
  const double damp = kScaleDamp * p.damping;
  std::vector<Comb> combs;
  for (int t : kCombTuning) {
    combs.emplace_back(ScaledLength(t, w.sample_rate()), feedback, damp);
  }
  std::vector<Allpass> allpasses;
  for (int t : kAllpassTuning) {
    allpasses.emplace_back(ScaledLength(t, w.sample_rate()));
  }

  const auto x = w.samples();
  std::vector<float> out(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double input = x[n] * kFixedGain;
    double acc = 0.0;
    for (Comb& c : combs) acc += c.Process(input);
    for (Allpass& a : allpasses) acc = a.Process(acc);
    out[n] = static_cast<float>(p.dry_level * x[n] +
                                p.wet_level * kScaleWet * acc);
  }
  return Waveform(std::move(out), w.sample_rate());
}

}  // namespace augkit
