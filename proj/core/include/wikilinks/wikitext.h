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

// Wikilink, section and redirect extraction from raw wikitext.
//
// Link extraction is a hand-written matcher equivalent to this Python
// regular expression (compiled with re.VERBOSE), applied with finditer:
//
//   \[\[
//   (?P<link>
//      [^\n\|\]\[\<\>\{\}]{0,256}
//   )
//   (?:
//     \|
//     (?P<anchor>
//         [^\[]*?
//     )
//   )?
//   \]\]
//
// The {0,256} bound counts code points, as Python does on str. Templates
// are never expanded: only links written literally in the text are found.

#ifndef WIKILINKS_WIKITEXT_H_
#define WIKILINKS_WIKITEXT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wikilinks {

// The pattern above, verbatim, for use by reference engines in tests.
extern const char kWikilinkPattern[];

// Maximum number of code points in the link group.
inline constexpr size_t kMaxLinkCodePoints = 256;

// One raw match of the link pattern, before any '#' splitting.
struct LinkMatch {
  size_t begin = 0;  // offset of the opening "[["
  size_t end = 0;    // one past the closing "]]"
  std::string_view link;
  std::optional<std::string_view> anchor;
};

// All non-overlapping matches, left to right. Runs in linear time.
std::vector<LinkMatch> MatchWikilinks(std::string_view wikitext);

// Tries to match the pattern exactly at `pos`.
std::optional<LinkMatch> MatchWikilinkAt(std::string_view wikitext, size_t pos);

struct Section {
  std::string name;
  int level = 0;
  int number = 0;
  size_t begin = 0;  // offset of the header line (0 for section 0)
  size_t end = 0;    // offset where the next section starts
};

// Section 0 is the text before the first header and always exists. A header
// is a line of the form ={2,6} name ={2,6} followed by optional whitespace;
// numbering ignores levels. With unbalanced markers the level is the smaller
// count and the surplus '=' stay in the name.
std::vector<Section> ScanSections(std::string_view wikitext);

struct ExtractedLink {
  std::string link;
  std::optional<std::string> tosection;
  std::optional<std::string> anchor;
  std::string section_name;
  int section_level = 0;
  int section_number = 0;
};

struct ExtractOptions {
  // Remove <!-- --> comments and <nowiki> spans before matching.
  bool strip_inert_spans = false;
};

std::vector<ExtractedLink> ExtractLinks(std::string_view wikitext,
                                        const ExtractOptions &options = {});

// Splits a raw link at its first '#'.
void SplitSection(std::string_view raw, std::string *link,
                  std::optional<std::string> *tosection);

// Drops comments (an unterminated comment runs to the end of the text) and
// <nowiki>...</nowiki> spans, tags included.
std::string StripInertSpans(std::string_view wikitext);

// Redirect keywords of one wiki. "#REDIRECT" is always a member.
class LanguageProfile {
 public:
  LanguageProfile(std::string language, std::vector<std::string> keywords);

  // Built-in profiles for de, en, es, fr, it, nl, pl, ru and sv. Throws
  // ConfigError for anything else.
  static LanguageProfile Builtin(std::string_view language);

  // Profiles from a JSON object {"lang": ["#KEYWORD", ...], ...}; built-in
  // languages missing from the file keep their defaults.
  static std::vector<LanguageProfile> LoadFile(const std::string &path);

  // Profile for `language`, taken from `config_path` when it is non-empty
  // and lists the language, otherwise the built-in one.
  static LanguageProfile Resolve(std::string_view language,
                                 const std::string &config_path);

  const std::string &language() const { return language_; }
  const std::vector<std::string> &keywords() const { return keywords_; }

 private:
  std::string language_;
  std::vector<std::string> keywords_;  // longest first
};

struct RedirectDecl {
  std::string target;
  std::optional<std::string> tosection;
};

struct RedirectDiagnostics {
  // Keyword found as first token but no [[link]] followed it.
  int64_t keyword_without_link = 0;
};

// A redirect is a keyword (case-insensitive) as the first non-whitespace
// token, then optional whitespace and at most one colon, then a [[link]].
std::optional<RedirectDecl> DetectRedirect(
    std::string_view wikitext, const LanguageProfile &profile,
    RedirectDiagnostics *diagnostics = nullptr);

// Canonical page title: whitespace trimmed, one leading ':' removed, runs of
// '_' and whitespace collapsed to one space, first letter uppercased.
// Returns nothing when the result is empty.
std::optional<std::string> NormalizeTitle(std::string_view raw);

}  // namespace wikilinks

#endif  // WIKILINKS_WIKITEXT_H_
