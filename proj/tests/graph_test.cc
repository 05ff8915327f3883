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

#include "wikilinks/graph.h"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_util.h"
#include "wikilinks/error.h"
#include "wikilinks/output.h"

namespace wikilinks {
namespace {

const SnapshotDate kDate{MakeDate(2018, 3, 1)};

// Page title -> redirect target ("" for an article).
Snapshot MakeSnapshot(
    const std::vector<std::pair<std::string, std::string>> &pages) {
  std::vector<RedirectEvent> events;
  int64_t id = 0;
  for (const auto &[title, target] : pages) {
    ++id;
    RedirectEvent e;
    e.page_id = id;
    e.page_title = title;
    e.revision_id = id * 10;
    e.timestamp = MakeDate(2017, 1, 1);
    if (!target.empty()) e.redirect = RedirectDecl{target, std::nullopt};
    events.push_back(e);
  }
  return ResolveSnapshot(events, kDate);
}

SnapshotLink Link(const Snapshot &s, const std::string &from,
                  const std::string &to) {
  const ResolvedPage *page = s.FindTitle(from);
  SnapshotLink l;
  l.page_id = page->page_id;
  l.page_title = page->title;
  l.revision_id = page->revision_id;
  l.link = *NormalizeTitle(to);
  l.is_active = s.Exists(l.link);
  return l;
}

std::vector<std::pair<int64_t, int64_t>> Pairs(const Graph &g) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (const EdgeRecord &e : g.edges) out.emplace_back(e.page_id_from, e.page_id_to);
  return out;
}

using PairList = std::vector<std::pair<int64_t, int64_t>>;

TEST(BuildGraphTest, LinkThroughRedirect) {
  // 1 P, 2 NYC -> 3 New York City.
  Snapshot s = MakeSnapshot(
      {{"P", ""}, {"NYC", "New York City"}, {"New York City", ""}});
  std::vector<SnapshotLink> links = {Link(s, "P", "NYC")};
  Graph g = BuildGraph(links, s);
  EXPECT_EQ(Pairs(g), (PairList{{1, 3}, {2, 3}}));
  EXPECT_EQ(g.edges[0].page_title_to, "New York City");
  EXPECT_EQ(g.nodes.size(), 3u);
}

TEST(BuildGraphTest, DuplicateLinksCollapse) {
  Snapshot s = MakeSnapshot({{"P", ""}, {"Q", ""}});
  std::vector<SnapshotLink> links = {Link(s, "P", "Q"), Link(s, "P", "q"),
                                     Link(s, "P", "Q")};
  EXPECT_EQ(Pairs(BuildGraph(links, s)), (PairList{{1, 2}}));
}

TEST(BuildGraphTest, RedLinksOnly) {
  Snapshot s = MakeSnapshot({{"P", ""}});
  std::vector<SnapshotLink> links = {Link(s, "P", "Missing"),
                                     Link(s, "P", "Other")};
  Graph g = BuildGraph(links, s);
  EXPECT_TRUE(g.edges.empty());
  ASSERT_EQ(g.nodes.size(), 1u);
  EXPECT_EQ(g.nodes[0], (NodeRecord{1, "P"}));
}

TEST(BuildGraphTest, RedirectPagesContributeOnlyTheirTarget) {
  Snapshot s = MakeSnapshot({{"R", "A"}, {"A", ""}, {"B", ""}});
  // A link stored on a redirect page (text after the redirect line).
  std::vector<SnapshotLink> links = {Link(s, "R", "B")};
  EXPECT_EQ(Pairs(BuildGraph(links, s)), (PairList{{1, 2}}));
}

TEST(BuildGraphTest, DanglingAndCycles) {
  Snapshot s = MakeSnapshot(
      {{"D", "Nowhere"}, {"X", "Y"}, {"Y", "X"}, {"P", ""}});
  std::vector<SnapshotLink> links = {Link(s, "P", "D"), Link(s, "P", "X")};
  // Cycle members point at their immediate target; links into a cycle end
  // at the cycle's entry target.
  EXPECT_EQ(Pairs(BuildGraph(links, s)), (PairList{{2, 3}, {3, 2}, {4, 3}}));
}

TEST(BuildGraphTest, SelfLoops) {
  Snapshot s = MakeSnapshot({{"P", ""}, {"Alias", "P"}});
  std::vector<SnapshotLink> links = {Link(s, "P", "P"), Link(s, "P", "Alias")};
  EXPECT_EQ(Pairs(BuildGraph(links, s)), (PairList{{1, 1}, {2, 1}}));
  GraphOptions drop;
  drop.drop_self_loops = true;
  EXPECT_EQ(Pairs(BuildGraph(links, s, drop)), (PairList{{2, 1}}));

  Snapshot self = MakeSnapshot({{"S", "S"}});
  EXPECT_EQ(Pairs(BuildGraph({}, self)), (PairList{{1, 1}}));
  EXPECT_TRUE(BuildGraph({}, self, drop).edges.empty());
}

TEST(BuildGraphTest, InconsistentInputThrows) {
  Snapshot s = MakeSnapshot({{"P", ""}});
  SnapshotLink unknown_source = Link(s, "P", "P");
  unknown_source.page_id = 99;
  EXPECT_THROW(BuildGraph(std::vector{unknown_source}, s), Error);
  SnapshotLink bogus_active = Link(s, "P", "Missing");
  bogus_active.is_active = true;
  EXPECT_THROW(BuildGraph(std::vector{bogus_active}, s), Error);
}

// Random snapshots: redirects have in-degree 0 and out-degree at most 1.
TEST(BuildGraphTest, RedirectNodeProperty) {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 500; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 12);
    std::vector<std::pair<std::string, std::string>> pages;
    for (int i = 0; i < n; ++i) {
      std::string target;
      if (rng() % 3 == 0) target = "T" + std::to_string(rng() % (n + 2));
      pages.emplace_back("T" + std::to_string(i), target);
    }
    Snapshot s = MakeSnapshot(pages);
    std::vector<SnapshotLink> links;
    for (int k = 0; k < 3 * n; ++k) {
      links.push_back(Link(s, "T" + std::to_string(rng() % n),
                           "T" + std::to_string(rng() % (n + 2))));
    }
    Graph g = BuildGraph(links, s);
    std::map<int64_t, int> in, out;
    for (const EdgeRecord &e : g.edges) {
      ++out[e.page_id_from];
      ++in[e.page_id_to];
    }
    for (const ResolvedPage &p : s.pages()) {
      if (!p.is_redirect) continue;
      // Cycle members may point at each other.
      if (p.resolution == Resolution::kCycle) {
        EXPECT_EQ(out[p.page_id], 1) << p.title;
        continue;
      }
      EXPECT_EQ(in[p.page_id], 0) << p.title;
      const int expected = p.resolution == Resolution::kResolved ? 1 : 0;
      EXPECT_EQ(out[p.page_id], expected) << p.title;
    }
    EXPECT_TRUE(std::is_sorted(g.edges.begin(), g.edges.end(),
                               [](const EdgeRecord &a, const EdgeRecord &b) {
                                 return std::tie(a.page_id_from, a.page_id_to) <
                                        std::tie(b.page_id_from, b.page_id_to);
                               }));
  }
}

TEST(EmitTest, EdgesSortedWithHeader) {
  testing::ScratchDir dir;
  std::vector<EdgeRecord> edges = {{2, "B", 1, "A"}, {1, "A", 2, "B"}};
  const std::string digest = EmitEdges(edges, dir / "e.csv.gz");
  EXPECT_EQ(digest, Sha256File(dir / "e.csv.gz"));
  EXPECT_EQ(testing::ReadDecoded(dir / "e.csv.gz"),
            "page_id_from,page_title_from,page_id_to,page_title_to\n"
            "1,A,2,B\n"
            "2,B,1,A\n");

  EmitEdges({}, dir / "empty.csv.gz");
  EXPECT_EQ(testing::ReadDecoded(dir / "empty.csv.gz"),
            "page_id_from,page_title_from,page_id_to,page_title_to\n");

  std::vector<NodeRecord> nodes = {{1, "A"}, {2, "Washington, D.C."}};
  EmitNodes(nodes, dir / "n.csv.gz");
  EXPECT_EQ(testing::ReadDecoded(dir / "n.csv.gz"),
            "page_id,page_title\n1,A\n2,\"Washington, D.C.\"\n");
}

}  // namespace
}  // namespace wikilinks
