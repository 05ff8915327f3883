// Copyright 2026 The wikilinks Authors.
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

#ifndef WIKILINKS_TIMESTAMP_H_
#define WIKILINKS_TIMESTAMP_H_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace wikilinks {

// UTC instant with second precision.
using Timestamp = std::chrono::sys_seconds;

// Parses "YYYY-MM-DDTHH:MM:SSZ" (the dump format). Returns nothing on any
// deviation from that shape or on out-of-range fields.
std::optional<Timestamp> ParseTimestamp(std::string_view text);

// Accepts either a full timestamp or a bare "YYYY-MM-DD" (midnight UTC).
std::optional<Timestamp> ParseDate(std::string_view text);

// "YYYY-MM-DDTHH:MM:SSZ".
std::string FormatTimestamp(Timestamp ts);

// "YYYY-MM-DD".
std::string FormatDate(Timestamp ts);

Timestamp MakeDate(int year, unsigned month, unsigned day);

}  // namespace wikilinks

#endif  // WIKILINKS_TIMESTAMP_H_
