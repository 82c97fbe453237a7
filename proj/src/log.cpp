// Copyright 2026 The sbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sbsim/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace sbsim {

namespace {

LogLevel initial_level() {
  const char* env = std::getenv("SBSIM_LOG");
  if (!env) return LogLevel::Warning;
  const std::string v(env);
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  if (v == "error") return LogLevel::Error;
  if (v == "off") return LogLevel::Off;
  return LogLevel::Warning;
}

std::atomic<LogLevel>& level_ref() {
  static std::atomic<LogLevel> level{initial_level()};
  return level;
}

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

constexpr const char* kNames[] = {"debug", "info", "warning", "error", "off"};

}  // namespace

void set_log_level(LogLevel level) { level_ref().store(level); }
LogLevel log_level() { return level_ref().load(); }

void log(LogLevel level, std::string_view message) {
  if (level < log_level() || level == LogLevel::Off) return;
  std::lock_guard lock(sink_mutex());
  std::clog << "[sbsim " << kNames[static_cast<int>(level)] << "] " << message << '\n';
}

}  // namespace sbsim
