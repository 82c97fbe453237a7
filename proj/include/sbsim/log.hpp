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

#pragma once

#include <string_view>

namespace sbsim {

enum class LogLevel { Debug, Info, Warning, Error, Off };

/// Messages below `level` are dropped. Defaults to Warning, or to the value of
/// SBSIM_LOG (debug|info|warning|error|off) when set.
void set_log_level(LogLevel level);
LogLevel log_level();

void log(LogLevel level, std::string_view message);
inline void log_warning(std::string_view m) { log(LogLevel::Warning, m); }
inline void log_info(std::string_view m) { log(LogLevel::Info, m); }

}  // namespace sbsim
