// augkit/reward/text.h

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

#ifndef AUGKIT_REWARD_TEXT_H_
#define AUGKIT_REWARD_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace augkit {

/// Normalized tokens; none contains whitespace.
using TokenSequence = std::vector<std::string>;

enum class ScriptMode {
  /// Words separated by whitespace. CJK characters still become one token
  /// each, so mixed-script text degrades gracefully.
  kSpaceDelimited,
  /// Every non-space, non-punctuation character is its own token.
  kCharacter,
};

/// Character mode for Chinese, Japanese, Korean and Cantonese tags
/// ("zh", "zh-CN", "cmn", ...), space-delimited otherwise.
ScriptMode ScriptModeForLanguage(std::string_view language);

/// Lowercases, maps punctuation to spaces, folds fullwidth ASCII, and splits.
/// Apostrophes between two letters are kept ("don't" stays one token).
TokenSequence NormalizeText(std::string_view raw, ScriptMode mode);

/// UTF-8 to code points; invalid bytes decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view s);
std::string EncodeUtf8(std::u32string_view s);

}  // namespace augkit

#endif  // AUGKIT_REWARD_TEXT_H_
