// augkit/src/audio/wav_io.cc

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

#include "augkit/audio/wav_io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <vector>

namespace augkit {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t ReadU16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t ReadU32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void PutU16(std::vector<std::uint8_t>* out, std::uint16_t v) {
  out->push_back(static_cast<std::uint8_t>(v & 0xFF));
  out->push_back(static_cast<std::uint8_t>(v >> 8));
}

void PutU32(std::vector<std::uint8_t>* out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out->push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
  }
}

void PutTag(std::vector<std::uint8_t>* out, const char* tag) {
  out->insert(out->end(), tag, tag + 4);
}

struct FormatChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
};

}  // namespace

Waveform LoadWav(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw WavError(WavErrorKind::kUnreadable,
                   "cannot open WAV file " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(is)),
                                  std::istreambuf_iterator<char>());
  const auto unreadable = [&](const std::string& why) {
    return WavError(WavErrorKind::kUnreadable,
                    "malformed WAV file " + path.string() + ": " + why);
  };
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw unreadable("missing RIFF/WAVE header");
  }

  std::optional<FormatChunk> fmt;
  const std::uint8_t* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    std::size_t size = ReadU32(chunk + 4);
    const std::uint8_t* body = chunk + 8;
    std::size_t available = bytes.size() - pos - 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || size > available) throw unreadable("bad fmt chunk");
      FormatChunk f;
      f.format = ReadU16(body);
      f.channels = ReadU16(body + 2);
      f.sample_rate = ReadU32(body + 4);
      f.bits = ReadU16(body + 14);
      if (f.format == kFormatExtensible) {
        if (size < 26) throw unreadable("short WAVE_FORMAT_EXTENSIBLE chunk");
        // First two bytes of the subformat GUID carry the real format tag.
        f.format = ReadU16(body + 24);
      }
      fmt = f;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = body;
      // Streaming writers sometimes leave the size unset; take what exists.
      data_size = std::min(size, available);
      break;
    }
    pos += 8 + size + (size & 1);
  }
  if (!fmt) throw unreadable("no fmt chunk");
  if (data == nullptr) throw unreadable("no data chunk");
  if (fmt->channels == 0 || fmt->sample_rate == 0) {
    throw unreadable("zero channels or sample rate");
  }

  int bytes_per_sample = 0;
  if (fmt->format == kFormatPcm && fmt->bits == 16) {
    bytes_per_sample = 2;
  } else if (fmt->format == kFormatFloat && fmt->bits == 32) {
    bytes_per_sample = 4;
  } else {
    throw WavError(WavErrorKind::kUnsupported,
                   "unsupported WAV encoding in " + path.string() +
                       " (format tag " + std::to_string(fmt->format) + ", " +
                       std::to_string(fmt->bits) + " bits)");
  }

  const std::size_t frame_bytes =
      static_cast<std::size_t>(bytes_per_sample) * fmt->channels;
  const std::size_t frames = data_size / frame_bytes;
  if (frames == 0) {
    throw WavError(WavErrorKind::kEmpty,
                   "WAV file has no samples: " + path.string());
  }

  std::vector<float> mono(frames);
  const double inv_channels = 1.0 / fmt->channels;
  for (std::size_t i = 0; i < frames; ++i) {
    const std::uint8_t* frame = data + i * frame_bytes;
    double sum = 0.0;
    for (int c = 0; c < fmt->channels; ++c) {
      const std::uint8_t* p = frame + c * bytes_per_sample;
      if (bytes_per_sample == 2) {
        sum += static_cast<std::int16_t>(ReadU16(p)) / 32768.0;
      } else {
        std::uint32_t bits = ReadU32(p);
        float v;
        std::memcpy(&v, &bits, sizeof(v));
        sum += v;
      }
    }
    mono[i] = static_cast<float>(sum * inv_channels);
  }
  return Waveform(std::move(mono), static_cast<int>(fmt->sample_rate));
}

void SaveWav(const Waveform& w, const std::filesystem::path& path) {
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(w.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  PutTag(&out, "RIFF");
  PutU32(&out, 36 + data_bytes);
  PutTag(&out, "WAVE");
  PutTag(&out, "fmt ");
  PutU32(&out, 16);
  PutU16(&out, kFormatPcm);
  PutU16(&out, 1);
  PutU32(&out, static_cast<std::uint32_t>(w.sample_rate()));
  PutU32(&out, static_cast<std::uint32_t>(w.sample_rate()) * 2);
  PutU16(&out, 2);
  PutU16(&out, 16);
  PutTag(&out, "data");
  PutU32(&out, data_bytes);
  for (float x : w.samples()) {
    double clamped = std::clamp(static_cast<double>(x), -1.0, 1.0);
    long q = std::lround(clamped * 32768.0);
    q = std::clamp(q, -32768L, 32767L);
    PutU16(&out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) {
    throw WavError(WavErrorKind::kUnwritable,
                   "cannot open for writing: " + path.string());
  }
  os.write(reinterpret_cast<const char*>(out.data()),
           static_cast<std::streamsize>(out.size()));
  if (!os) {
    throw WavError(WavErrorKind::kUnwritable,
                   "write failed: " + path.string());
  }
}

}  // namespace augkit
