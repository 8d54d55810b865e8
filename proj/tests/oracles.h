// augkit/tests/oracles.h

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

// Independent reference implementations and signal generators shared by the
// unit and acceptance tests. Nothing here calls into the code under test
// except for the Waveform container.

#ifndef AUGKIT_TESTS_ORACLES_H_
#define AUGKIT_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "augkit/audio/waveform.h"

namespace augkit::testing {

inline Waveform Sine(double freq, double seconds, int rate, double amp = 0.5) {
  std::vector<float> x(static_cast<std::size_t>(seconds * rate));
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = static_cast<float>(
        amp * std::sin(2.0 * std::numbers::pi * freq * i / rate));
  }
  return Waveform(std::move(x), rate);
}

// Voiced harmonic stack with a 4 Hz syllable envelope, short pauses and a
// little breath noise. Loud enough to pass the loudness gates.
inline Waveform SpeechLike(double seconds, int rate, std::uint64_t seed,
                           double level = 0.3) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> breath(0.0, 0.01);
  std::uniform_real_distribution<double> pitch(110.0, 220.0);
  const double f0 = pitch(rng);
  std::vector<float> x(static_cast<std::size_t>(seconds * rate));
  double phase = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = static_cast<double>(i) / rate;
    const double f = f0 * (1.0 + 0.05 * std::sin(2.0 * std::numbers::pi * 0.7 * t));
    phase += 2.0 * std::numbers::pi * f / rate;
    double voiced = 0.0;
    for (int h = 1; h <= 12; ++h) voiced += std::sin(h * phase) / h;
    const double syllable = std::max(0.0, std::sin(2.0 * std::numbers::pi * 4.0 * t));
    const bool pause = std::fmod(t, 1.3) > 1.1;
    x[i] = static_cast<float>(
        pause ? breath(rng) : level * syllable * voiced / 3.0 + breath(rng));
  }
  return Waveform(std::move(x), rate);
}

// Alignment counts recovered by walking a full edit-distance table back
// from the end, preferring match, then substitution, deletion, insertion.
struct OracleAlignment {
  std::size_t correct = 0, subs = 0, ins = 0, dels = 0;
  std::vector<std::pair<std::string, std::string>> pairs;  // (hyp, ref)
};

inline OracleAlignment OracleAlign(const std::vector<std::string>& h,
                                   const std::vector<std::string>& r) {
  const std::size_t n = h.size(), m = r.size();
  // d[i][j]: distance between h[0, i) and r[0, j).
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 || j == 0) {
        d[i][j] = static_cast<int>(i + j);
        continue;
      }
      d[i][j] = std::min({d[i - 1][j - 1] + (h[i - 1] == r[j - 1] ? 0 : 1),
                          d[i - 1][j] + 1, d[i][j - 1] + 1});
    }
  }
  OracleAlignment out;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && h[i - 1] == r[j - 1] && d[i][j] == d[i - 1][j - 1]) {
      ++out.correct;
      --i, --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      ++out.subs;
      out.pairs.emplace_back(h[i - 1], r[j - 1]);
      --i, --j;
    } else if (j > 0 && d[i][j] == d[i][j - 1] + 1) {
      ++out.dels;  // reference token missing from the hypothesis
      --j;
    } else {
      ++out.ins;
      --i;
    }
  }
  std::reverse(out.pairs.begin(), out.pairs.end());
  return out;
}

// Minimum edit cost over every alignment, by exhaustive recursion.
template <typename Seq>
int ExhaustiveEditDistance(const Seq& a, const Seq& b, std::size_t i = 0,
                           std::size_t j = 0) {
  if (i == a.size()) return static_cast<int>(b.size() - j);
  if (j == b.size()) return static_cast<int>(a.size() - i);
  const int sub = ExhaustiveEditDistance(a, b, i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
  const int del = ExhaustiveEditDistance(a, b, i + 1, j) + 1;
  const int ins = ExhaustiveEditDistance(a, b, i, j + 1) + 1;
  return std::min({sub, del, ins});
}

// Longest common subsequence by trying every subsequence of `a`.
inline std::size_t ExhaustiveLcs(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b) {
  std::size_t best = 0;
  const std::uint32_t limit = 1u << a.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const auto bits = static_cast<std::size_t>(__builtin_popcount(mask));
    if (bits <= best) continue;
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(mask & (1u << i))) continue;
      while (k < b.size() && b[k] != a[i]) ++k;
      if (k == b.size()) goto next;
      ++k;
    }
    best = bits;
  next:;
  }
  return best;
}

inline std::vector<std::string> RandomTokens(std::mt19937_64& rng,
                                             std::size_t max_len, int vocab) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> tok(0, vocab - 1);
  std::vector<std::string> out(len(rng));
  for (auto& t : out) t = std::string(1, static_cast<char>('a' + tok(rng)));
  return out;
}

inline double MeanSquare(const Waveform& w) {
  double acc = 0.0;
  for (float v : w.samples()) acc += static_cast<double>(v) * v;
  return w.empty() ? 0.0 : acc / static_cast<double>(w.size());
}

// Power of a single frequency component, by correlation with a quadrature
// pair over an integer number of periods near the middle of the signal.
inline double TonePower(const Waveform& w, double freq, double skip_seconds = 0.1) {
  const int rate = w.sample_rate();
  const auto skip = static_cast<std::size_t>(skip_seconds * rate);
  const double period = rate / freq;
  const auto periods = static_cast<std::size_t>((w.size() - 2 * skip) / period);
  const auto n = static_cast<std::size_t>(periods * period);
  double c = 0.0, s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double phase = 2.0 * std::numbers::pi * freq * static_cast<double>(k) / rate;
    c += w[skip + k] * std::cos(phase);
    s += w[skip + k] * std::sin(phase);
  }
  const double amp = 2.0 * std::hypot(c, s) / static_cast<double>(n);
  return amp * amp / 2.0;
}

}  // namespace augkit::testing

#endif  // AUGKIT_TESTS_ORACLES_H_
