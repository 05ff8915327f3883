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

// Random full-history dumps: articles, redirects (chains, cycles, dangling),
// red links, duplicates and revisions spread over 2001-2018.

#ifndef WIKILINKS_TESTS_SYNTHETIC_DUMP_H_
#define WIKILINKS_TESTS_SYNTHETIC_DUMP_H_

#include <cstdio>
#include <random>
#include <string>

namespace wikilinks::testing {

struct SyntheticDumpOptions {
  uint32_t seed = 1;
  int first_page_id = 1;
  int pages = 50;
  // Titles are drawn from [0, title_space); ids past the page range are
  // red links.
  int title_space = 0;  // 0: 1.3 * (first_page_id + pages)
  int max_revisions = 6;
};

inline std::string SyntheticDump(const SyntheticDumpOptions &o) {
  std::mt19937 rng(o.seed);
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  const int space = o.title_space > 0
                        ? o.title_space
                        : (o.first_page_id + o.pages) * 13 / 10 + 1;
  auto title = [](int k) {
    return "Topic " + std::to_string(k);
  };
  // Spellings vary but normalize to the same title.
  auto link_text = [&](int k) {
    switch (pick(6)) {
      case 0:
        return "topic_" + std::to_string(k);
      case 1:
        return title(k) + "#Part " + std::to_string(pick(3));
      case 2:
        return title(k) + "|shown text";
      default:
        return title(k);
    }
  };

  std::string out =
      "<mediawiki xmlns=\"http://www.mediawiki.org/xml/export-0.10/\" "
      "version=\"0.10\">\n  <siteinfo><sitename>Synthetic</sitename>"
      "</siteinfo>\n";
  int64_t revision_id = int64_t{o.first_page_id} * 100;
  for (int i = 0; i < o.pages; ++i) {
    const int page_id = o.first_page_id + i;
    out += "  <page>\n    <title>" + title(page_id) +
           "</title>\n    <ns>0</ns>\n    <id>" + std::to_string(page_id) +
           "</id>\n";
    const int revisions = 1 + pick(o.max_revisions);
    int year = 2001 + pick(17);
    int day = 1 + pick(20);
    for (int r = 0; r < revisions; ++r) {
      ++revision_id;
      if (pick(3) != 0) {
        ++day;
        if (day > 28) {
          day = 1;
          ++year;
        }
      }
      if (pick(4) == 0 && year < 2018) ++year;
      char ts[64];
      std::snprintf(ts, sizeof(ts), "%04d-%02d-%02dT%02d:00:00Z", year,
                    1 + pick(12), day, pick(24));
      // Random months leave revisions out of order within a page; the
      // reader sorts them.
      std::string text;
      const int kind = pick(10);
      if (kind < 3) {
        text = "#REDIRECT [[" + link_text(pick(space)) + "]]";
        if (kind == 0) text += "\n[[" + title(pick(space)) + "]]";
      } else {
        text = "Intro [[" + link_text(pick(space)) + "]].\n";
        const int sections = pick(3);
        for (int s = 0; s <= sections; ++s) {
          if (s > 0) text += "== Section " + std::to_string(s) + " ==\n";
          const int links = pick(5);
          for (int l = 0; l < links; ++l) {
            text += "See [[" + link_text(pick(space)) + "]] ";
          }
          if (pick(5) == 0) text += "[[" + title(page_id) + "]] ";
          text += "\n";
        }
      }
      out += "    <revision>\n      <id>" + std::to_string(revision_id) +
             "</id>\n      <timestamp>" + ts +
             "</timestamp>\n      <contributor><username>U" +
             std::to_string(pick(9)) + "</username><id>" +
             std::to_string(1 + pick(9)) +
             "</id></contributor>\n      <text xml:space=\"preserve\">" +
             text + "</text>\n    </revision>\n";
    }
    out += "  </page>\n";
  }
  out += "</mediawiki>\n";
  return out;
}

}  // namespace wikilinks::testing

#endif  // WIKILINKS_TESTS_SYNTHETIC_DUMP_H_
