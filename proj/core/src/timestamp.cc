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

#include "wikilinks/timestamp.h"

#include <cstdio>

namespace wikilinks {

namespace {

bool ReadDigits(std::string_view text, size_t pos, size_t count, int *out) {
  if (pos + count > text.size()) return false;
  int value = 0;
  for (size_t i = pos; i < pos + count; ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  *out = value;
  return true;
}

std::optional<std::chrono::sys_days> ParseDay(std::string_view text) {
  int y, m, d;
  if (text.size() < 10 || !ReadDigits(text, 0, 4, &y) || text[4] != '-' ||
      !ReadDigits(text, 5, 2, &m) || text[7] != '-' ||
      !ReadDigits(text, 8, 2, &d)) {
    return std::nullopt;
  }
  std::chrono::year_month_day ymd{std::chrono::year{y},
                                  std::chrono::month{static_cast<unsigned>(m)},
                                  std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return std::chrono::sys_days{ymd};
}

}  // namespace

std::optional<Timestamp> ParseTimestamp(std::string_view text) {
  if (text.size() != 20) return std::nullopt;
  auto day = ParseDay(text);
  if (!day) return std::nullopt;
  int hh, mm, ss;
  if (text[10] != 'T' || !ReadDigits(text, 11, 2, &hh) || text[13] != ':' ||
      !ReadDigits(text, 14, 2, &mm) || text[16] != ':' ||
      !ReadDigits(text, 17, 2, &ss) || text[19] != 'Z') {
    return std::nullopt;
  }
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  return Timestamp{*day} + std::chrono::hours{hh} + std::chrono::minutes{mm} +
         std::chrono::seconds{ss};
}

std::optional<Timestamp> ParseDate(std::string_view text) {
  if (text.size() == 10) {
    auto day = ParseDay(text);
    if (!day) return std::nullopt;
    return Timestamp{*day};
  }
  return ParseTimestamp(text);
}

std::string FormatTimestamp(Timestamp ts) {
  auto day = std::chrono::floor<std::chrono::days>(ts);
  std::chrono::year_month_day ymd{day};
  std::chrono::hh_mm_ss hms{ts - day};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

std::string FormatDate(Timestamp ts) {
  return FormatTimestamp(ts).substr(0, 10);
}

Timestamp MakeDate(int year, unsigned month, unsigned day) {
  return Timestamp{std::chrono::sys_days{std::chrono::year_month_day{
      std::chrono::year{year}, std::chrono::month{month},
      std::chrono::day{day}}}};
}

}  // namespace wikilinks
