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

#ifndef WIKILINKS_UTF8_H_
#define WIKILINKS_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace wikilinks::utf8 {

// Decodes the code point starting at *pos and advances *pos past it.
// Malformed sequences decode to U+FFFD and consume one byte.
char32_t Decode(std::string_view text, size_t *pos);

void Append(char32_t cp, std::string *out);

inline bool IsContinuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Simple one-to-one case mappings for Latin, Greek and Cyrillic, which is
// what the supported wikis' titles and redirect keywords need.
char32_t ToLower(char32_t cp);
char32_t ToUpper(char32_t cp);

// Case-insensitive prefix test; returns the byte length of the matched
// prefix of `text`, or 0 if `prefix` does not match.
size_t MatchPrefixIgnoreCase(std::string_view text, std::string_view prefix);

std::string ToLower(std::string_view text);

}  // namespace wikilinks::utf8

#endif  // WIKILINKS_UTF8_H_
