// augkit/audio/wav_io.h

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

#ifndef AUGKIT_AUDIO_WAV_IO_H_
#define AUGKIT_AUDIO_WAV_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "augkit/audio/waveform.h"

namespace augkit {

enum class WavErrorKind {
  kUnreadable,     // missing file, short read, malformed RIFF structure
  kUnsupported,    // encoding other than PCM16 / float32
  kEmpty,          // well-formed but zero samples
  kUnwritable,
};

class WavError : public std::runtime_error {
 public:
  WavError(WavErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  WavErrorKind kind() const { return kind_; }

 private:
  WavErrorKind kind_;
};

/// Reads a PCM16 or IEEE float32 RIFF/WAVE file, downmixing by channel mean.
/// PCM16 values are scaled by 1/32768.
Waveform LoadWav(const std::filesystem::path& path);

/// Writes mono PCM16 little-endian. Samples are clamped to [-1, 1] and
/// quantized as round(x * 32768), saturating at 32767.
void SaveWav(const Waveform& w, const std::filesystem::path& path);

}  // namespace augkit

#endif  // AUGKIT_AUDIO_WAV_IO_H_
