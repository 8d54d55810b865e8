// augkit/pipeline/log.h

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

#ifndef AUGKIT_PIPELINE_LOG_H_
#define AUGKIT_PIPELINE_LOG_H_

#include <ostream>
#include <string_view>

#include "json.hpp"

namespace augkit {

/// Writes {"level": ..., "event": ..., <fields>} as one JSON line to the log
/// sink (stderr by default). Thread-safe.
void LogEvent(std::string_view level, std::string_view event,
              const nlohmann::ordered_json& fields = nlohmann::ordered_json::object());

/// Redirects structured logs; nullptr silences them. Returns the old sink.
std::ostream* SetLogSink(std::ostream* sink);

}  // namespace augkit

#endif  // AUGKIT_PIPELINE_LOG_H_
