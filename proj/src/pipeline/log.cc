// augkit/src/pipeline/log.cc

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

#include "augkit/pipeline/log.h"

#include <iostream>
#include <mutex>

namespace augkit {

namespace {

std::mutex& LogMutex() {
  static std::mutex m;
  return m;
}

std::ostream*& Sink() {
  static std::ostream* sink = &std::cerr;
  return sink;
}

}  // namespace

void LogEvent(std::string_view level, std::string_view event,
              const nlohmann::ordered_json& fields) {
  nlohmann::ordered_json line;
  line["level"] = level;
  line["event"] = event;
  for (const auto& [key, value] : fields.items()) line[key] = value;
  const std::string text = line.dump(-1, ' ', false,
                                     nlohmann::json::error_handler_t::replace);
  std::lock_guard<std::mutex> lock(LogMutex());
  if (Sink() != nullptr) *Sink() << text << '\n' << std::flush;
}

std::ostream* SetLogSink(std::ostream* sink) {
  std::lock_guard<std::mutex> lock(LogMutex());
  std::ostream* old = Sink();
  Sink() = sink;
  return old;
}

}  // namespace augkit
