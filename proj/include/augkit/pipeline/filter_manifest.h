// augkit/pipeline/filter_manifest.h

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

#ifndef AUGKIT_PIPELINE_FILTER_MANIFEST_H_
#define AUGKIT_PIPELINE_FILTER_MANIFEST_H_

#include <cstddef>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace augkit {

/// Rows whose recognizer WER exceeds this are discarded as unlearnable.
inline constexpr double kDefaultMaxWer = 0.7;

struct FilterSummary {
  std::size_t kept = 0;
  std::size_t dropped = 0;
  /// Rows without a numeric base_wer, or not valid JSON.
  std::size_t rejected = 0;
};

nlohmann::ordered_json FilterSummaryToJson(const FilterSummary& s);

/// Copies each row with base_wer <= max_wer to `out` byte for byte, in input
/// order. Blank lines are skipped; rejected rows are logged and omitted.
FilterSummary FilterManifestStream(std::istream& in, std::ostream& out,
                                   double max_wer = kDefaultMaxWer);

}  // namespace augkit

#endif  // AUGKIT_PIPELINE_FILTER_MANIFEST_H_
