// augkit/src/reward/text.cc

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

#include "augkit/reward/text.h"

#include <algorithm>
#include <cctype>

namespace augkit {

namespace {

bool IsCjk(char32_t c) {
  return (c >= 0x4E00 && c <= 0x9FFF) || (c >= 0x3400 && c <= 0x4DBF) ||
         (c >= 0x20000 && c <= 0x2A6DF) || (c >= 0xF900 && c <= 0xFAFF) ||
         (c >= 0x3040 && c <= 0x30FF) || (c >= 0xAC00 && c <= 0xD7AF);
}

bool IsPunctuation(char32_t c) {
  if (c < 0x80) return std::ispunct(static_cast<int>(c)) != 0;
  return (c >= 0x00A1 && c <= 0x00BF && c != 0x00AA && c != 0x00B5 &&
          c != 0x00BA) ||
         c == 0x00D7 || c == 0x00F7 || (c >= 0x2000 && c <= 0x206F) ||
         (c >= 0x3000 && c <= 0x303F) || (c >= 0xFE30 && c <= 0xFE4F) ||
         (c >= 0xFF01 && c <= 0xFF0F) || (c >= 0xFF1A && c <= 0xFF20) ||
         (c >= 0xFF3B && c <= 0xFF40) || (c >= 0xFF5B && c <= 0xFF65);
}

bool IsSpace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == 0x00A0 || c == 0x3000 || c == 0x200B;
}

bool IsLetter(char32_t c) {
  return (c < 0x80 && std::isalnum(static_cast<int>(c))) ||
         (c >= 0x00C0 && c != 0x00D7 && c != 0x00F7 && !IsPunctuation(c) &&
          !IsSpace(c));
}

char32_t Fold(char32_t c) {
  // Fullwidth ASCII variants.
  if (c >= 0xFF10 && c <= 0xFF5A &&
      !((c >= 0xFF1A && c <= 0xFF20) || (c >= 0xFF3B && c <= 0xFF40))) {
    c = c - 0xFF10 + U'0';
  }
  if (c >= U'A' && c <= U'Z') return c + 32;
  // Latin-1 uppercase letters.
  if (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7) return c + 32;
  return c;
}

}  // namespace

ScriptMode ScriptModeForLanguage(std::string_view language) {
  std::string lang;
  for (char ch : language) {
    if (ch == '-' || ch == '_') break;
    lang.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  for (std::string_view cjk : {"zh", "cmn", "yue", "ja", "ko", "chinese",
                               "mandarin", "cantonese", "japanese", "korean"}) {
    if (lang == cjk) return ScriptMode::kCharacter;
  }
  return ScriptMode::kSpaceDelimited;
}

std::u32string DecodeUtf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b = static_cast<unsigned char>(s[i]);
    int extra = 0;
    char32_t c = 0;
    if (b < 0x80) {
      c = b;
    } else if ((b & 0xE0) == 0xC0) {
      c = b & 0x1F;
      extra = 1;
    } else if ((b & 0xF0) == 0xE0) {
      c = b & 0x0F;
      extra = 2;
    } else if ((b & 0xF8) == 0xF0) {
      c = b & 0x07;
      extra = 3;
    } else {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    // A truncated or broken sequence becomes one U+FFFD covering the lead
    // byte and whatever continuation bytes it did have.
    int valid = 0;
    while (valid < extra && i + 1 + valid < s.size() &&
           (static_cast<unsigned char>(s[i + 1 + valid]) & 0xC0) == 0x80) {
      c = (c << 6) | (static_cast<unsigned char>(s[i + 1 + valid]) & 0x3F);
      ++valid;
    }
    if (valid < extra) {
      out.push_back(0xFFFD);
      i += 1 + valid;
      continue;
    }
    out.push_back(c);
    i += extra + 1;
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

TokenSequence NormalizeText(std::string_view raw, ScriptMode mode) {
  std::u32string text = DecodeUtf8(raw);
  for (char32_t& c : text) c = Fold(c);

  TokenSequence tokens;
  std::u32string current;
  const auto flush = [&] {
    if (!current.empty()) tokens.push_back(EncodeUtf8(current));
    current.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char32_t c = text[i];
    const bool apostrophe = c == U'\'' || c == 0x2019;
    if (apostrophe && mode == ScriptMode::kSpaceDelimited && i > 0 &&
        i + 1 < text.size() && IsLetter(text[i - 1]) && IsLetter(text[i + 1]) &&
        !IsCjk(text[i - 1]) && !IsCjk(text[i + 1])) {
      current.push_back(U'\'');
      continue;
    }
    if (IsSpace(c) || IsPunctuation(c)) {
      flush();
    } else if (mode == ScriptMode::kCharacter || IsCjk(c)) {
      flush();
      current.push_back(c);
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

}  // namespace augkit
