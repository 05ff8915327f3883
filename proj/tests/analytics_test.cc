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

#include "wikilinks/analytics.h"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dense_pagerank.h"
#include "test_util.h"
#include "wikilinks/csv.h"
#include "wikilinks/error.h"
#include "wikilinks/graph.h"

namespace wikilinks {
namespace {

using testing::DensePageRank;
using testing::ScratchDir;

double Sum(const std::vector<double> &v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

TEST(PageRankTest, TriangleIsUniform) {
  std::vector<DenseEdge> edges = {{0, 1}, {1, 2}, {2, 0}};
  auto r = PageRank(3, edges);
  EXPECT_TRUE(r.converged);
  for (double s : r.scores) EXPECT_NEAR(s, 1.0 / 3, 1e-12);
}

TEST(PageRankTest, TwoNodesMatchesClosedForm) {
  std::vector<DenseEdge> edges = {{0, 1}};
  auto r = PageRank(2, edges);
  auto oracle = DensePageRank(2, edges, 0.85);
  ASSERT_TRUE(r.converged);
  EXPECT_NEAR(r.scores[0], oracle[0], 1e-10);
  EXPECT_NEAR(r.scores[1], oracle[1], 1e-10);
  // By hand: xA = 0.075 + 0.425 xB and xA + xB = 1.
  EXPECT_NEAR(r.scores[0], 0.5 / 1.425, 1e-10);
  EXPECT_GT(r.scores[1], r.scores[0]);
}

TEST(PageRankTest, EmptyAndEdgeless) {
  auto empty = PageRank(0, {});
  EXPECT_TRUE(empty.scores.empty());
  auto isolated = PageRank(4, {});
  for (double s : isolated.scores) EXPECT_NEAR(s, 0.25, 1e-15);
}

TEST(PageRankTest, RejectsBadOptions) {
  PageRankOptions bad;
  bad.damping = 1.0;
  EXPECT_THROW(PageRank(1, {}, bad), ConfigError);
  bad.damping = 0;
  EXPECT_THROW(PageRank(1, {}, bad), ConfigError);
  PageRankOptions iters;
  iters.max_iterations = 0;
  EXPECT_THROW(PageRank(1, {}, iters), ConfigError);
  std::vector<DenseEdge> out_of_range = {{0, 5}};
  EXPECT_THROW(PageRank(2, out_of_range), Error);
}

std::vector<DenseEdge> RandomGraph(std::mt19937 *rng, size_t n, size_t m) {
  std::vector<DenseEdge> edges;
  for (size_t k = 0; k < m; ++k) {
    edges.emplace_back(static_cast<uint32_t>((*rng)() % n),
                       static_cast<uint32_t>((*rng)() % n));
  }
  return edges;
}

TEST(PageRankTest, MassIsConservedAtEveryIteration) {
  std::mt19937 rng(3);
  auto edges = RandomGraph(&rng, 30, 50);
  for (int k = 1; k <= 40; ++k) {
    PageRankOptions o;
    o.max_iterations = k;
    auto r = PageRank(30, edges, o);
    EXPECT_EQ(r.iterations, k);
    EXPECT_NEAR(Sum(r.scores), 1.0, 1e-9);
    for (double s : r.scores) EXPECT_GE(s, 0);
  }
}

TEST(PageRankTest, NonConvergenceIsFlagged) {
  std::mt19937 rng(4);
  auto edges = RandomGraph(&rng, 50, 120);
  PageRankOptions o;
  o.max_iterations = 3;
  auto r = PageRank(50, edges, o);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 3);
  EXPECT_GT(r.last_change, o.tolerance);
  EXPECT_EQ(r.scores.size(), 50u);
}

TEST(PageRankTest, SmallGraphsMatchDenseSolve) {
  std::mt19937 rng(8);
  for (int iter = 0; iter < 400; ++iter) {
    const size_t n = 1 + rng() % 8;
    auto edges = RandomGraph(&rng, n, rng() % (3 * n));
    auto r = PageRank(n, edges);
    auto oracle = DensePageRank(n, edges, 0.85);
    ASSERT_TRUE(r.converged);
    for (size_t i = 0; i < n; ++i) EXPECT_NEAR(r.scores[i], oracle[i], 1e-10);
  }
}

TEST(PageRankTest, RelabelingPermutesScores) {
  std::mt19937 rng(9);
  const size_t n = 40;
  auto edges = RandomGraph(&rng, n, 90);
  std::vector<uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<DenseEdge> relabeled;
  for (const auto &[u, v] : edges) relabeled.emplace_back(perm[u], perm[v]);
  auto a = PageRank(n, edges);
  auto b = PageRank(n, relabeled);
  for (size_t i = 0; i < n; ++i) EXPECT_NEAR(a.scores[i], b.scores[perm[i]], 1e-12);

  std::vector<std::string> titles_a, titles_b(n);
  for (size_t i = 0; i < n; ++i) {
    titles_a.push_back("N" + std::to_string(i));
    titles_b[perm[i]] = titles_a[i];
  }
  auto rank_a = RankArticles(titles_a, a.scores, 10);
  auto rank_b = RankArticles(titles_b, b.scores, 10);
  for (size_t i = 0; i < 10; ++i) EXPECT_EQ(rank_a[i].title, rank_b[i].title);
}

TEST(PageRankTest, ThreadCountDoesNotChangeBits) {
  std::mt19937 rng(10);
  auto edges = RandomGraph(&rng, 5000, 20000);
  PageRankOptions one;
  auto base = PageRank(5000, edges, one);
  for (int threads : {2, 3, 8, 16}) {
    PageRankOptions o;
    o.threads = threads;
    auto r = PageRank(5000, edges, o);
    EXPECT_EQ(r.scores, base.scores) << threads;
    EXPECT_EQ(r.iterations, base.iterations);
  }
}

TEST(RankingTest, OrderAndFormat) {
  std::vector<std::string> titles = {"B", "A", "C, D"};
  std::vector<double> scores = {0.25, 0.25, 0.5};
  auto ranking = RankArticles(titles, scores);
  ASSERT_EQ(ranking.size(), 3u);
  EXPECT_EQ(ranking[0].title, "C, D");
  EXPECT_EQ(ranking[1].title, "A");
  EXPECT_EQ(RankingCsv(ranking),
            "rank,title,score\n"
            "1,\"C, D\",5.00000e-01\n"
            "2,A,2.50000e-01\n"
            "3,B,2.50000e-01\n");
  EXPECT_EQ(RankArticles(titles, scores, 1).size(), 1u);
  std::vector<RankedArticle> tiny = {{"US", 1.4142e-3}};
  EXPECT_EQ(RankingCsv(tiny), "rank,title,score\n1,US,1.41420e-03\n");
}

void WriteGraph(const std::filesystem::path &dir,
                const std::vector<NodeRecord> &nodes,
                const std::vector<EdgeRecord> &edges) {
  EmitNodes(nodes, dir / "n.csv.gz");
  EmitEdges(edges, dir / "e.csv.gz");
}

TEST(StatsTest, Counts) {
  ScratchDir dir;
  const Timestamp date = MakeDate(2018, 3, 1);
  WriteGraph(dir.path(), {}, {});
  EXPECT_EQ(ComputeStats("en", date, dir / "e.csv.gz", dir / "n.csv.gz"),
            (GraphStats{"en", date, 0, 0}));

  WriteGraph(dir.path(), {{1, "A"}, {2, "B"}, {3, "C"}},
             {{1, "A", 2, "B"}, {2, "B", 3, "C"}, {3, "C", 1, "A"}});
  EXPECT_EQ(ComputeStats("en", date, dir / "e.csv.gz", dir / "n.csv.gz"),
            (GraphStats{"en", date, 3, 3}));

  DenseGraph g = LoadDenseGraph(dir / "e.csv.gz", dir / "n.csv.gz");
  EXPECT_EQ(g.titles, (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(g.edges, (std::vector<DenseEdge>{{0, 1}, {1, 2}, {2, 0}}));
}

TEST(StatsTest, MalformedRowReportsLine) {
  ScratchDir dir;
  testing::WriteFile(dir / "n.csv", "page_id,page_title\n1,A\n");
  testing::WriteFile(dir / "e.csv",
                     "page_id_from,page_title_from,page_id_to,page_title_to\n"
                     "1,A,1,A\n"
                     "x,A,1,A\n");
  try {
    ComputeStats("en", MakeDate(2018, 3, 1), dir / "e.csv", dir / "n.csv");
    FAIL();
  } catch (const CsvError &e) {
    EXPECT_EQ(e.line(), 3);
  }
  testing::WriteFile(dir / "e.csv",
                     "page_id_from,page_title_from,page_id_to,page_title_to\n"
                     "1,A,7,G\n");
  EXPECT_THROW(LoadDenseGraph(dir / "e.csv", dir / "n.csv"), CsvError);
}

TEST(GrowthTest, SortedRowsNoInterpolation) {
  std::vector<GraphStats> stats = {
      {"sv", MakeDate(2014, 3, 1), 5, 6},
      {"en", MakeDate(2003, 3, 1), 3, 4},
      {"en", MakeDate(2001, 3, 1), 1, 2},
  };
  EXPECT_EQ(GrowthSeriesCsv(stats),
            "language,date,nodes,edges\n"
            "en,2001-03-01,1,2\n"
            "en,2003-03-01,3,4\n"
            "sv,2014-03-01,5,6\n");
}

}  // namespace
}  // namespace wikilinks
