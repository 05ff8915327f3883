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

#include "wikilinks/wikitext.h"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "wikilinks/error.h"
#include "wikilinks/utf8.h"

namespace wikilinks {

const char kWikilinkPattern[] =
    "\\[\\[\n"
    "(?P<link>\n"
    "   [^\\n\\|\\]\\[\\<\\>\\{\\}]{0,256}\n"
    ")\n"
    "(?:\n"
    "  \\|\n"
    "  (?P<anchor>\n"
    "      [^\\[]*?\n"
    "  )\n"
    ")?\n"
    "\\]\\]\n";

namespace {

inline bool IsExcludedFromLink(char c) {
  switch (c) {
    case '\n':
    case '|':
    case ']':
    case '[':
    case '<':
    case '>':
    case '{':
    case '}':
      return true;
    default:
      return false;
  }
}

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view TrimSpace(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

bool StartsWithIgnoreAsciiCase(std::string_view text, size_t pos,
                               std::string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    char a = text[pos + i];
    if (a >= 'A' && a <= 'Z') a = static_cast<char>(a + 32);
    if (a != prefix[i]) return false;
  }
  return true;
}

size_t FindIgnoreAsciiCase(std::string_view text, size_t from,
                           std::string_view needle) {
  for (size_t pos = text.find('<', from); pos != std::string_view::npos;
       pos = text.find('<', pos + 1)) {
    if (StartsWithIgnoreAsciiCase(text, pos, needle)) return pos;
  }
  return std::string_view::npos;
}

// Parses a header line with trailing newline already removed. Returns false
// if the line is not a header.
bool ParseHeaderLine(std::string_view line, std::string *name, int *level) {
  while (!line.empty() && IsSpace(line.back())) line.remove_suffix(1);
  if (line.size() < 2 || line[0] != '=' || line[1] != '=') return false;
  size_t leading = 0;
  while (leading < line.size() && line[leading] == '=') ++leading;
  size_t trailing = 0;
  while (trailing < line.size() && line[line.size() - 1 - trailing] == '=') {
    ++trailing;
  }
  size_t lvl = std::min<size_t>({leading, trailing, 6});
  while (lvl >= 2 && 2 * lvl >= line.size()) --lvl;
  if (lvl < 2) return false;
  std::string_view inner = TrimSpace(line.substr(lvl, line.size() - 2 * lvl));
  if (inner.empty()) return false;
  *name = std::string(inner);
  *level = static_cast<int>(lvl);
  return true;
}

}  // namespace

std::optional<LinkMatch> MatchWikilinkAt(std::string_view text, size_t pos) {
  const size_t n = text.size();
  if (pos + 1 >= n || text[pos] != '[' || text[pos + 1] != '[') {
    return std::nullopt;
  }
  size_t i = pos + 2;
  size_t code_points = 0;
  while (i < n && code_points < kMaxLinkCodePoints &&
         !IsExcludedFromLink(text[i])) {
    ++code_points;
    ++i;
    while (i < n && utf8::IsContinuation(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  }
  const size_t link_end = i;
  if (link_end >= n) return std::nullopt;

  LinkMatch match;
  match.begin = pos;
  match.link = text.substr(pos + 2, link_end - pos - 2);
  if (text[link_end] == '|') {
    // Lazy anchor: the first "]]" not preceded by a '[' wins.
    for (size_t j = link_end + 1; j < n; ++j) {
      if (text[j] == ']' && j + 1 < n && text[j + 1] == ']') {
        match.anchor = text.substr(link_end + 1, j - link_end - 1);
        match.end = j + 2;
        return match;
      }
      if (text[j] == '[') break;
    }
    // Without the anchor group the "]]" would have to follow the link
    // directly, but the next character is '|'.
    return std::nullopt;
  }
  if (text[link_end] == ']' && link_end + 1 < n && text[link_end + 1] == ']') {
    match.end = link_end + 2;
    return match;
  }
  return std::nullopt;
}

std::vector<LinkMatch> MatchWikilinks(std::string_view text) {
  std::vector<LinkMatch> matches;
  size_t pos = 0;
  while (true) {
    pos = text.find("[[", pos);
    if (pos == std::string_view::npos) break;
    if (auto m = MatchWikilinkAt(text, pos)) {
      pos = m->end;
      matches.push_back(*m);
    } else {
      ++pos;
    }
  }
  return matches;
}

std::vector<Section> ScanSections(std::string_view text) {
  std::vector<Section> sections;
  sections.push_back(Section{"", 0, 0, 0, text.size()});
  size_t line_start = 0;
  while (line_start < text.size()) {
    size_t nl = text.find('\n', line_start);
    size_t line_end = nl == std::string_view::npos ? text.size() : nl;
    if (text[line_start] == '=') {
      Section header;
      if (ParseHeaderLine(text.substr(line_start, line_end - line_start),
                          &header.name, &header.level)) {
        header.number = static_cast<int>(sections.size());
        header.begin = line_start;
        header.end = text.size();
        sections.back().end = line_start;
        sections.push_back(std::move(header));
      }
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  return sections;
}

void SplitSection(std::string_view raw, std::string *link,
                  std::optional<std::string> *tosection) {
  size_t hash = raw.find('#');
  if (hash == std::string_view::npos) {
    link->assign(raw);
    tosection->reset();
  } else {
    link->assign(raw.substr(0, hash));
    tosection->emplace(raw.substr(hash + 1));
  }
}

std::string StripInertSpans(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    size_t lt = text.find('<', pos);
    if (lt == std::string_view::npos) break;
    out.append(text.substr(pos, lt - pos));
    if (text.compare(lt, 4, "<!--") == 0) {
      size_t close = text.find("-->", lt + 4);
      pos = close == std::string_view::npos ? text.size() : close + 3;
    } else if (StartsWithIgnoreAsciiCase(text, lt, "<nowiki/>")) {
      pos = lt + 9;
    } else if (StartsWithIgnoreAsciiCase(text, lt, "<nowiki>")) {
      size_t close = FindIgnoreAsciiCase(text, lt + 8, "</nowiki>");
      pos = close == std::string_view::npos ? lt + 8 : close + 9;
    } else {
      out.push_back('<');
      pos = lt + 1;
    }
  }
  if (pos < text.size()) out.append(text.substr(pos));
  return out;
}

std::vector<ExtractedLink> ExtractLinks(std::string_view wikitext,
                                        const ExtractOptions &options) {
  std::string stripped;
  if (options.strip_inert_spans) {
    stripped = StripInertSpans(wikitext);
    wikitext = stripped;
  }
  const std::vector<Section> sections = ScanSections(wikitext);
  const std::vector<LinkMatch> matches = MatchWikilinks(wikitext);

  std::vector<ExtractedLink> links;
  links.reserve(matches.size());
  size_t current = 0;
  for (const LinkMatch &m : matches) {
    while (current + 1 < sections.size() &&
           sections[current + 1].begin <= m.begin) {
      ++current;
    }
    const Section &section = sections[current];
    ExtractedLink link;
    SplitSection(m.link, &link.link, &link.tosection);
    if (m.anchor) link.anchor.emplace(*m.anchor);
    link.section_name = section.name;
    link.section_level = section.level;
    link.section_number = section.number;
    links.push_back(std::move(link));
  }
  return links;
}

LanguageProfile::LanguageProfile(std::string language,
                                 std::vector<std::string> keywords)
    : language_(std::move(language)), keywords_(std::move(keywords)) {
  if (std::find(keywords_.begin(), keywords_.end(), "#REDIRECT") ==
      keywords_.end()) {
    keywords_.push_back("#REDIRECT");
  }
  // Longest first so "#REDIRECTION" is tried before "#REDIRECT".
  std::stable_sort(keywords_.begin(), keywords_.end(),
                   [](const std::string &a, const std::string &b) {
                     return a.size() > b.size();
                   });
}

LanguageProfile LanguageProfile::Builtin(std::string_view language) {
  struct Entry {
    const char *language;
    std::vector<std::string> keywords;
  };
  static const std::vector<Entry> *const kBuiltins = new std::vector<Entry>{
      {"de", {"#WEITERLEITUNG"}},
      {"en", {"#REDIRECT"}},
      {"es", {"#REDIRECCIÓN", "#REDIRECCION"}},
      {"fr", {"#REDIRECTION"}},
      {"it", {"#RINVIA", "#RINVIO", "#RIMANDO"}},
      {"nl", {"#DOORVERWIJZING"}},
      {"pl", {"#PATRZ", "#PRZEKIERUJ", "#TAM"}},
      {"ru", {"#ПЕРЕНАПРАВЛЕНИЕ", "#ПЕРЕНАПР"}},
      {"sv", {"#OMDIRIGERING"}},
  };
  for (const Entry &e : *kBuiltins) {
    if (language == e.language) return LanguageProfile(e.language, e.keywords);
  }
  throw ConfigError("no built-in redirect keywords for language '" +
                    std::string(language) + "'");
}

std::vector<LanguageProfile> LanguageProfile::LoadFile(
    const std::string &path) {
  std::ifstream in(path);
  if (!in) throw MissingInputError(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError(path + ": expected an object of language -> keywords");
  }
  std::vector<LanguageProfile> profiles;
  for (const auto &[language, words] : doc.items()) {
    if (!words.is_array()) {
      throw ConfigError(path + ": keywords for '" + language +
                        "' must be an array");
    }
    std::vector<std::string> keywords;
    for (const auto &w : words) {
      if (!w.is_string() || w.get<std::string>().empty()) {
        throw ConfigError(path + ": keywords for '" + language +
                          "' must be non-empty strings");
      }
      keywords.push_back(w.get<std::string>());
    }
    profiles.emplace_back(language, std::move(keywords));
  }
  return profiles;
}

LanguageProfile LanguageProfile::Resolve(std::string_view language,
                                         const std::string &config_path) {
  if (!config_path.empty()) {
    for (LanguageProfile &p : LoadFile(config_path)) {
      if (p.language() == language) return std::move(p);
    }
  }
  return Builtin(language);
}

std::optional<RedirectDecl> DetectRedirect(std::string_view text,
                                           const LanguageProfile &profile,
                                           RedirectDiagnostics *diagnostics) {
  size_t pos = 0;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  while (pos < text.size() && IsSpace(text[pos])) ++pos;
  if (pos >= text.size()) return std::nullopt;

  bool keyword_seen = false;
  std::string_view rest = text.substr(pos);
  for (const std::string &keyword : profile.keywords()) {
    size_t matched = utf8::MatchPrefixIgnoreCase(rest, keyword);
    if (matched == 0) continue;
    keyword_seen = true;
    size_t p = pos + matched;
    while (p < text.size() && IsSpace(text[p])) ++p;
    if (p < text.size() && text[p] == ':') {
      ++p;
      while (p < text.size() && IsSpace(text[p])) ++p;
    }
    if (auto m = MatchWikilinkAt(text, p)) {
      RedirectDecl decl;
      SplitSection(m->link, &decl.target, &decl.tosection);
      return decl;
    }
  }
  if (keyword_seen && diagnostics != nullptr) {
    ++diagnostics->keyword_without_link;
  }
  return std::nullopt;
}

std::optional<std::string> NormalizeTitle(std::string_view raw) {
  std::string_view s = TrimSpace(raw);
  if (!s.empty() && s.front() == ':') s.remove_prefix(1);

  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (c == '_' || IsSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  if (out.empty()) return std::nullopt;

  size_t first_end = 0;
  char32_t first = utf8::Decode(out, &first_end);
  char32_t upper = utf8::ToUpper(first);
  if (upper != first) {
    std::string head;
    utf8::Append(upper, &head);
    out.replace(0, first_end, head);
  }
  return out;
}

}  // namespace wikilinks
