// augkit/src/reward/align.cc

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

#include "augkit/reward/align.h"

#include <algorithm>
#include <stdexcept>

namespace augkit {

AlignmentResult Align(const TokenSequence& hyp, const TokenSequence& ref) {
  const std::size_t rows = ref.size() + 1;
  const std::size_t cols = hyp.size() + 1;
  // cost[i * cols + j]: distance between ref[0, i) and hyp[0, j).
  std::vector<std::size_t> cost(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) cost[i * cols] = i;
  for (std::size_t j = 0; j < cols; ++j) cost[j] = j;
  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      const std::size_t diag =
          cost[(i - 1) * cols + j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const std::size_t del = cost[(i - 1) * cols + j] + 1;
      const std::size_t ins = cost[i * cols + j - 1] + 1;
      cost[i * cols + j] = std::min({diag, del, ins});
    }
  }

  AlignmentResult out;
  std::size_t i = ref.size();
  std::size_t j = hyp.size();
  while (i > 0 || j > 0) {
    const std::size_t here = cost[i * cols + j];
    if (i > 0 && j > 0) {
      const std::size_t diag = cost[(i - 1) * cols + j - 1];
      const bool same = ref[i - 1] == hyp[j - 1];
      if (same && here == diag) {
        ++out.n_correct;
        --i;
        --j;
        continue;
      }
      if (!same && here == diag + 1) {
        out.substitutions.push_back({hyp[j - 1], ref[i - 1]});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && here == cost[(i - 1) * cols + j] + 1) {
      ++out.n_deletions;
      --i;
    } else {
      ++out.n_insertions;
      --j;
    }
  }
  std::reverse(out.substitutions.begin(), out.substitutions.end());
  return out;
}

double ComputeWer(const AlignmentResult& a, std::size_t ref_len) {
  if (ref_len == 0) {
    throw std::invalid_argument("ComputeWer: empty reference");
  }
  return static_cast<double>(a.errors()) / static_cast<double>(ref_len);
}

std::size_t LongestCommonSubsequence(const TokenSequence& a,
                                     const TokenSequence& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::size_t CharEditDistance(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1),
                         prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double TokenSimilarity(std::string_view h, std::string_view r) {
  const std::u32string hc = DecodeUtf8(h);
  const std::u32string rc = DecodeUtf8(r);
  const std::size_t longest = std::max(hc.size(), rc.size());
  if (longest == 0) {
    throw std::invalid_argument("TokenSimilarity: both tokens empty");
  }
  return 1.0 - static_cast<double>(CharEditDistance(hc, rc)) /
                   static_cast<double>(longest);
}

}  // namespace augkit
