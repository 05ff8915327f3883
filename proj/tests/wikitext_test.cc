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

#include <gtest/gtest.h>

#include <chrono>

#include "reference_regex.h"
#include "test_util.h"
#include "wikilinks/error.h"

namespace wikilinks {
namespace {

using ::wikilinks::testing::Repeat;

ExtractedLink Only(std::string_view text) {
  auto links = ExtractLinks(text);
  EXPECT_EQ(links.size(), 1u) << text;
  return links.empty() ? ExtractedLink{} : links[0];
}

TEST(ExtractLinksTest, LinkWithAnchor) {
  auto l = Only("[[New York City|The Big Apple]]");
  EXPECT_EQ(l.link, "New York City");
  EXPECT_EQ(l.anchor, "The Big Apple");
  EXPECT_FALSE(l.tosection);
}

TEST(ExtractLinksTest, PlainLink) {
  auto l = Only("[[NYC]]");
  EXPECT_EQ(l.link, "NYC");
  EXPECT_FALSE(l.anchor);
}

TEST(ExtractLinksTest, SplitsAtFirstPound) {
  auto l = Only("[[A#History|see]]");
  EXPECT_EQ(l.link, "A");
  EXPECT_EQ(l.tosection, "History");
  EXPECT_EQ(l.anchor, "see");

  l = Only("[[A#b#c]]");
  EXPECT_EQ(l.link, "A");
  EXPECT_EQ(l.tosection, "b#c");
}

TEST(ExtractLinksTest, EmptyLinkIsStillAMatch) {
  auto l = Only("[[]]");
  EXPECT_EQ(l.link, "");
  EXPECT_FALSE(l.anchor);
}

TEST(ExtractLinksTest, AnchorMayContainPipes) {
  auto l = Only("[[a|b|c]]");
  EXPECT_EQ(l.link, "a");
  EXPECT_EQ(l.anchor, "b|c");
}

TEST(ExtractLinksTest, EmptyAnchorIsPresent) {
  auto l = Only("[[a|]]");
  EXPECT_EQ(l.anchor, "");
}

TEST(ExtractLinksTest, RedLinksAndDuplicatesAreKept) {
  auto links = ExtractLinks("[[A]] [[Nowhere]] [[A]]");
  ASSERT_EQ(links.size(), 3u);
  EXPECT_EQ(links[2].link, "A");
}

TEST(ExtractLinksTest, EmptyInput) { EXPECT_TRUE(ExtractLinks("").empty()); }

TEST(ExtractLinksTest, LinkLengthBoundCountsCodePoints) {
  EXPECT_EQ(ExtractLinks("[[" + Repeat("Ж", 256) + "]]").size(), 1u);
  EXPECT_EQ(ExtractLinks("[[" + Repeat("Ж", 257) + "]]").size(), 0u);
  EXPECT_EQ(ExtractLinks("[[" + Repeat("x", 256) + "]]").size(), 1u);
  EXPECT_EQ(ExtractLinks("[[" + Repeat("x", 257) + "]]").size(), 0u);
}

TEST(ExtractLinksTest, ForbiddenCharactersEndTheLink) {
  EXPECT_TRUE(ExtractLinks("[[a\nb]]").empty());
  EXPECT_TRUE(ExtractLinks("[[a{b]]").empty());
  EXPECT_TRUE(ExtractLinks("[[a<b]]").empty());
  // The inner [[b]] still matches.
  auto links = ExtractLinks("[[a[[b]]");
  ASSERT_EQ(links.size(), 1u);
  EXPECT_EQ(links[0].link, "b");
}

TEST(ExtractLinksTest, AnchorStopsAtFirstClosingPair) {
  auto links = ExtractLinks("[[a|b]]c]]");
  ASSERT_EQ(links.size(), 1u);
  EXPECT_EQ(links[0].anchor, "b");
  // '[' is not allowed in the anchor, so the whole match fails here.
  EXPECT_TRUE(ExtractLinks("[[a|b[c]]").empty());
}

TEST(ExtractLinksTest, CommentsAreNotSkippedByDefault) {
  const std::string text = "x <!-- [[Hidden]] --> <nowiki>[[Raw]]</nowiki>";
  EXPECT_EQ(ExtractLinks(text).size(), 2u);
  EXPECT_TRUE(ExtractLinks(text, ExtractOptions{true}).empty());
}

TEST(StripInertSpansTest, Variants) {
  EXPECT_EQ(StripInertSpans("a<!-- b -->c"), "ac");
  EXPECT_EQ(StripInertSpans("a<!-- unterminated [[x]]"), "a");
  EXPECT_EQ(StripInertSpans("a<nowiki>[[x]]</nowiki>b<nowiki/>c"), "abc");
}

TEST(SectionsTest, NoHeaders) {
  auto sections = ScanSections("just text\nmore");
  ASSERT_EQ(sections.size(), 1u);
  EXPECT_EQ(sections[0].name, "");
  EXPECT_EQ(sections[0].level, 0);
  EXPECT_EQ(sections[0].number, 0);
  EXPECT_EQ(sections[0].begin, 0u);
  EXPECT_EQ(sections[0].end, 14u);
}

TEST(SectionsTest, NumberingIgnoresLevels) {
  auto sections = ScanSections("intro\n== A ==\nx\n=== B ===\ny");
  ASSERT_EQ(sections.size(), 3u);
  EXPECT_EQ(sections[1].name, "A");
  EXPECT_EQ(sections[1].level, 2);
  EXPECT_EQ(sections[1].number, 1);
  EXPECT_EQ(sections[2].name, "B");
  EXPECT_EQ(sections[2].level, 3);
  EXPECT_EQ(sections[2].number, 2);
}

TEST(SectionsTest, UnbalancedMarkers) {
  auto sections = ScanSections("== A ===\n");
  ASSERT_EQ(sections.size(), 2u);
  EXPECT_EQ(sections[1].level, 2);
  EXPECT_EQ(sections[1].name, "A =");

  sections = ScanSections("=== A ==\n");
  ASSERT_EQ(sections.size(), 2u);
  EXPECT_EQ(sections[1].level, 2);
  EXPECT_EQ(sections[1].name, "= A");
}

TEST(SectionsTest, NotHeaders) {
  EXPECT_EQ(ScanSections("= A =\n").size(), 1u);  // level 1 is the title
  EXPECT_EQ(ScanSections(" == A ==\n").size(), 1u);
  EXPECT_EQ(ScanSections("== A == x\n").size(), 1u);
  EXPECT_EQ(ScanSections("====\n").size(), 1u);
}

TEST(SectionsTest, TrailingWhitespaceAllowed) {
  auto sections = ScanSections("a\n==History== \t\nb");
  ASSERT_EQ(sections.size(), 2u);
  EXPECT_EQ(sections[1].name, "History");
}

TEST(SectionsTest, DeepMarkersCapAtSix) {
  auto sections = ScanSections("======= A =======\n");
  ASSERT_EQ(sections.size(), 2u);
  EXPECT_EQ(sections[1].level, 6);
  EXPECT_EQ(sections[1].name, "= A =");
}

TEST(ExtractLinksTest, SectionCoordinates) {
  auto links = ExtractLinks(
      "[[Intro]]\n== History ==\n[[Past]]\n=== Early ===\n[[Old|o]]\n"
      "== Notes ==\n[[Ref]]");
  ASSERT_EQ(links.size(), 4u);
  EXPECT_EQ(links[0].section_number, 0);
  EXPECT_EQ(links[0].section_name, "");
  EXPECT_EQ(links[0].section_level, 0);
  EXPECT_EQ(links[1].section_name, "History");
  EXPECT_EQ(links[1].section_number, 1);
  EXPECT_EQ(links[2].section_name, "Early");
  EXPECT_EQ(links[2].section_level, 3);
  EXPECT_EQ(links[2].section_number, 2);
  EXPECT_EQ(links[3].section_number, 3);
  for (size_t i = 1; i < links.size(); ++i) {
    EXPECT_LE(links[i - 1].section_number, links[i].section_number);
  }
}

TEST(RedirectTest, English) {
  auto en = LanguageProfile::Builtin("en");
  auto r = DetectRedirect("#REDIRECT [[New York City]]", en);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->target, "New York City");
  EXPECT_FALSE(r->tosection);
}

TEST(RedirectTest, German) {
  auto de = LanguageProfile::Builtin("de");
  auto r = DetectRedirect("#WEITERLEITUNG [[Berlin]]", de);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->target, "Berlin");
  // #REDIRECT works everywhere.
  EXPECT_TRUE(DetectRedirect("#REDIRECT [[Berlin]]", de));
}

TEST(RedirectTest, NotFirstToken) {
  auto en = LanguageProfile::Builtin("en");
  EXPECT_FALSE(DetectRedirect("Some text #REDIRECT [[X]]", en));
}

TEST(RedirectTest, CaseColonWhitespaceSection) {
  auto en = LanguageProfile::Builtin("en");
  auto r = DetectRedirect("\n  #redirect: [[X#Part|label]]", en);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->target, "X");
  EXPECT_EQ(r->tosection, "Part");
  EXPECT_TRUE(DetectRedirect("#Redirect[[X]]", en));
  EXPECT_TRUE(DetectRedirect("\xEF\xBB\xBF#REDIRECT [[X]]", en));
  EXPECT_FALSE(DetectRedirect("#REDIRECT :: [[X]]", en));
  EXPECT_FALSE(DetectRedirect("#REDIRECTS [[X]]", en));
}

TEST(RedirectTest, KeywordWithoutLinkIsCounted) {
  auto en = LanguageProfile::Builtin("en");
  RedirectDiagnostics diag;
  EXPECT_FALSE(DetectRedirect("#REDIRECT nothing here", en, &diag));
  EXPECT_FALSE(DetectRedirect("plain text", en, &diag));
  EXPECT_EQ(diag.keyword_without_link, 1);
}

TEST(RedirectTest, EveryBuiltinLanguage) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"de", "#WEITERLEITUNG"}, {"en", "#REDIRECT"},
      {"es", "#REDIRECCIÓN"},   {"es", "#REDIRECCION"},
      {"fr", "#REDIRECTION"},   {"it", "#RINVIA"},
      {"it", "#RINVIO"},        {"it", "#RIMANDO"},
      {"nl", "#DOORVERWIJZING"}, {"pl", "#PATRZ"},
      {"pl", "#PRZEKIERUJ"},    {"pl", "#TAM"},
      {"ru", "#ПЕРЕНАПРАВЛЕНИЕ"}, {"ru", "#ПЕРЕНАПР"},
      {"sv", "#OMDIRIGERING"}};
  for (const auto &[lang, keyword] : cases) {
    auto profile = LanguageProfile::Builtin(lang);
    auto r = DetectRedirect(keyword + " [[Target]]", profile);
    ASSERT_TRUE(r) << lang << " " << keyword;
    EXPECT_EQ(r->target, "Target");
    EXPECT_TRUE(DetectRedirect("#REDIRECT [[Target]]", profile)) << lang;
  }
  // Lowercase Cyrillic.
  EXPECT_TRUE(DetectRedirect("#перенаправление [[Москва]]",
                             LanguageProfile::Builtin("ru")));
  // Keywords are per language.
  EXPECT_FALSE(DetectRedirect("#WEITERLEITUNG [[X]]",
                              LanguageProfile::Builtin("en")));
  EXPECT_THROW(LanguageProfile::Builtin("xx"), ConfigError);
}

TEST(RedirectTest, RedirectTargetIsFirstExtractedLink) {
  auto en = LanguageProfile::Builtin("en");
  const std::string text = "#REDIRECT [[A#b]] [[C]]";
  auto r = DetectRedirect(text, en);
  ASSERT_TRUE(r);
  auto links = ExtractLinks(text);
  ASSERT_FALSE(links.empty());
  EXPECT_EQ(links[0].link, r->target);
  EXPECT_EQ(links[0].tosection, r->tosection);
}

TEST(LanguageProfileTest, LoadFromFile) {
  testing::ScratchDir dir;
  const auto path = dir / "profiles.json";
  testing::WriteFile(path, R"({"xx": ["#UMLEITEN"], "en": ["#GOTO"]})");
  auto xx = LanguageProfile::Resolve("xx", path.string());
  EXPECT_TRUE(DetectRedirect("#umleiten [[X]]", xx));
  EXPECT_TRUE(DetectRedirect("#REDIRECT [[X]]", xx));
  auto en = LanguageProfile::Resolve("en", path.string());
  EXPECT_TRUE(DetectRedirect("#GOTO [[X]]", en));
  auto de = LanguageProfile::Resolve("de", path.string());
  EXPECT_TRUE(DetectRedirect("#WEITERLEITUNG [[X]]", de));

  testing::WriteFile(path, R"(["not", "an", "object"])");
  EXPECT_THROW(LanguageProfile::Resolve("en", path.string()), ConfigError);
}

TEST(NormalizeTitleTest, Examples) {
  EXPECT_EQ(NormalizeTitle("new_York  City"), "New York City");
  EXPECT_EQ(NormalizeTitle(""), std::nullopt);
  EXPECT_EQ(NormalizeTitle(":NYC"), "NYC");
  EXPECT_EQ(NormalizeTitle("  _ "), std::nullopt);
  EXPECT_EQ(NormalizeTitle(" __a__b__ "), "A b");
  EXPECT_EQ(NormalizeTitle("école"), "École");
  EXPECT_EQ(NormalizeTitle("москва"), "Москва");
  EXPECT_EQ(NormalizeTitle("iPhone"), "IPhone");
}

TEST(RegexFidelityTest, AgreesWithReferenceEngine) {
  testing::ReferenceRegex reference;
  testing::WikitextGenerator gen(20260101);
  for (int i = 0; i < 2000; ++i) {
    const std::string text = gen.Next();
    ASSERT_EQ(testing::HandMatches(text), reference.Matches(text)) << text;
  }
  for (const std::string &text : testing::AdversarialWikitext()) {
    ASSERT_EQ(testing::HandMatches(text), reference.Matches(text)) << text;
  }
}

TEST(RegexFidelityTest, LinearOnAdversarialInput) {
  using Clock = std::chrono::steady_clock;
  auto time = [](const std::string &text) {
    auto start = Clock::now();
    size_t n = 0;
    for (int rep = 0; rep < 3; ++rep) n += MatchWikilinks(text).size();
    EXPECT_GE(n, 0u);
    return std::chrono::duration<double>(Clock::now() - start).count();
  };
  const size_t size = 1 << 20;
  std::string uniform;
  while (uniform.size() < size) uniform += "Lorem ipsum [[dolor]] sit amet. ";
  const double base = time(uniform);
  const std::vector<std::string> units = {"[", "[[a|", "[[a",
                                         "[[" + Repeat("x", 200)};
  for (const std::string &unit : units) {
    std::string adversarial;
    while (adversarial.size() < size) adversarial += unit;
    EXPECT_LT(time(adversarial), 10 * base + 0.05) << unit.substr(0, 8);
  }
}

}  // namespace
}  // namespace wikilinks
