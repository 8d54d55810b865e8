// augkit/src/pipeline/chain_runner.cc

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

#include "augkit/pipeline/chain_runner.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <variant>

#include "augkit/audio/random.h"
#include "augkit/audio/resample.h"
#include "augkit/audio/wav_io.h"
#include "augkit/effects/effects.h"
#include "augkit/pipeline/manifest.h"

namespace augkit {

namespace fs = std::filesystem;

namespace {

const ParamValue& Get(const ParamMap& params, std::string_view key,
                      Primitive p) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument(std::string(PrimitiveName(p)) +
                                ": missing parameter " + std::string(key));
  }
  return it->second;
}

double Number(const ParamMap& params, std::string_view key, Primitive p) {
  const ParamValue& v = Get(params, key, p);
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&v)) {
    return static_cast<double>(*i);
  }
  throw std::invalid_argument(std::string(PrimitiveName(p)) + ": parameter " +
                              std::string(key) + " is not numeric");
}

double NumberOr(const ParamMap& params, std::string_view key, Primitive p,
                double fallback) {
  return params.contains(key) ? Number(params, key, p) : fallback;
}

int Integer(const ParamMap& params, std::string_view key, Primitive p) {
  return static_cast<int>(std::lround(Number(params, key, p)));
}

bool Flag(const ParamMap& params, std::string_view key) {
  auto it = params.find(key);
  if (it == params.end()) return false;
  const bool* b = std::get_if<bool>(&it->second);
  return b != nullptr && *b;
}

std::string Text(const ParamMap& params, std::string_view key, Primitive p) {
  const ParamValue& v = Get(params, key, p);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  throw std::invalid_argument(std::string(PrimitiveName(p)) + ": parameter " +
                              std::string(key) + " is not a string");
}

FilterType ParseFilterType(const std::string& s) {
  if (s == "lowpass") return FilterType::kLowpass;
  if (s == "highpass") return FilterType::kHighpass;
  throw std::invalid_argument("apply_filter: unknown filter_type " + s);
}

Waveform WhiteNoise(std::size_t length, int sample_rate, std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<float> samples(length);
  for (float& v : samples) v = static_cast<float>(rng.Gaussian());
  return Waveform(std::move(samples), sample_rate);
}

bool UsesPool(Primitive p, const ParamMap& params) {
  return p == Primitive::kAddNoise && !Flag(params, "use_white_noise");
}

}  // namespace

NoisePool::NoisePool(std::vector<fs::path> files, int sample_rate)
    : files_(std::move(files)), sample_rate_(sample_rate) {
  std::sort(files_.begin(), files_.end());
}

NoisePool NoisePool::FromDirectory(const fs::path& dir, int sample_rate) {
  std::vector<fs::path> files;
  std::error_code ec;
  fs::recursive_directory_iterator it(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot list noise directory " + dir.string() +
                             ": " + ec.message());
  }
  for (const auto& entry : it) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
    if (ext == ".wav") files.push_back(entry.path());
  }
  return NoisePool(std::move(files), sample_rate);
}

Waveform NoisePool::Load(std::size_t i) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->clips.find(i);
    if (it != cache_->clips.end()) return it->second;
  }
  // Decoding happens outside the lock; a racing thread computes the same
  // value, so whichever insert wins is fine.
  Waveform clip = ResampleTo(LoadWav(files_.at(i)), sample_rate_);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->clips.try_emplace(i, std::move(clip)).first->second;
}

bool NeedsNoisePool(const ResolvedChain& chain) {
  return std::any_of(chain.chain.begin(), chain.chain.end(),
                     [](const ResolvedEffect& e) {
                       return UsesPool(e.primitive, e.params);
                     });
}

bool NeedsNoisePool(const MergedChain& chain) {
  return std::any_of(chain.chain.begin(), chain.chain.end(),
                     [](const EffectSpec& e) {
                       return UsesPool(e.primitive, e.fixed);
                     });
}

ChainRun RunChain(const Waveform& input, const ResolvedChain& chain,
                  const NoisePool* pool) {
  ChainRun run{input, {}};
  for (std::size_t pos = 0; pos < chain.chain.size(); ++pos) {
    const ResolvedEffect& step = chain.chain[pos];
    const ParamMap& q = step.params;
    const Primitive p = step.primitive;
    AppliedEffect applied{p, q, std::nullopt, false, false};
    Waveform& w = run.audio;

    switch (p) {
      case Primitive::kAddNoise: {
        const NoiseParams np{Number(q, "noise_db", p),
                             NumberOr(q, "wet", p, 1.0)};
        if (Flag(q, "use_white_noise")) {
          const Waveform noise = WhiteNoise(
              w.size(), w.sample_rate(),
              EffectStreamSeed(chain.stream_seed, pos,
                               StreamDomain::kWhiteNoise));
          w = AddNoise(w, noise, np);
        } else {
          if (pool == nullptr || pool->empty()) {
            throw std::runtime_error("add_noise needs a noise pool");
          }
          const std::size_t index =
              EffectStreamSeed(chain.stream_seed, pos,
                               StreamDomain::kNoisePick) %
              pool->size();
          Waveform noise = pool->Load(index);
          if (noise.sample_rate() != w.sample_rate()) {
            noise = ResampleTo(noise, w.sample_rate());
          }
          applied.noise_file = pool->file(index).generic_string();
          w = AddNoise(w, noise, np);
        }
        break;
      }
      case Primitive::kAddEcho:
        w = AddEcho(w, {Number(q, "delay_seconds", p), Number(q, "feedback", p),
                        Number(q, "mix", p)});
        break;
      case Primitive::kAddReverb:
        w = AddReverb(w, {Number(q, "room_size", p), Number(q, "damping", p),
                          Number(q, "wet_level", p), Number(q, "dry_level", p)});
        break;
      case Primitive::kAddDistortion:
        w = AddDistortion(w, {Number(q, "drive_db", p),
                              NumberOr(q, "wet", p, 1.0)});
        break;
      case Primitive::kAddResample:
        w = AddResample(w, {Integer(q, "target_sr", p),
                            NumberOr(q, "wet", p, 1.0), Number(q, "prob", p),
                            NumberOr(q, "threshold", p, 0.4)});
        break;
      case Primitive::kApplyFilter:
        w = ApplyFilter(w, {ParseFilterType(Text(q, "filter_type", p)),
                            Number(q, "cutoff_hz", p), Integer(q, "repeat", p),
                            NumberOr(q, "wet", p, 1.0)});
        break;
      case Primitive::kChangeVolume:
      case Primitive::kChangeVolumeDistortion: {
        VolumeReport report;
        const LoudnessParams lp{Number(q, "target_lufs", p)};
        w = p == Primitive::kChangeVolume ? ChangeVolume(w, lp, &report)
                                          : ChangeVolumeDistortion(w, lp, &report);
        applied.clipped = report.clipped;
        applied.skipped = !report.measured_lufs.has_value();
        break;
      }
      case Primitive::kAddStutterReplace: {
        RandomStream rng(
            EffectStreamSeed(chain.stream_seed, pos, StreamDomain::kStutter));
        w = AddStutterReplace(
            w,
            {Number(q, "frame_ms", p), Number(q, "stutter_prob", p),
             Number(q, "repeat_prob", p), Integer(q, "max_repeats", p)},
            rng);
        break;
      }
    }
    run.applied.push_back(std::move(applied));
  }
  return run;
}

nlohmann::ordered_json AppliedChainToJson(
    const std::vector<AppliedEffect>& applied) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const AppliedEffect& a : applied) {
    nlohmann::ordered_json j;
    j["effect"] = PrimitiveName(a.primitive);
    j["params"] = ParamMapToJson(a.params);
    if (a.noise_file) j["noise_file"] = *a.noise_file;
    if (a.primitive == Primitive::kChangeVolume ||
        a.primitive == Primitive::kChangeVolumeDistortion) {
      j["clipped"] = a.clipped;
      j["unmeasurable"] = a.skipped;
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace augkit
