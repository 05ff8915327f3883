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

#ifndef WIKILINKS_ANALYTICS_H_
#define WIKILINKS_ANALYTICS_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wikilinks/timestamp.h"

namespace wikilinks {

struct GraphStats {
  std::string language;
  Timestamp date;
  int64_t node_count = 0;
  int64_t edge_count = 0;

  bool operator==(const GraphStats &) const = default;
};

// Counts the data rows of an edge file and a node file, checking that each
// row is well formed. Throws CsvError with the offending line otherwise.
GraphStats ComputeStats(const std::string &language, Timestamp date,
                        const std::filesystem::path &edge_path,
                        const std::filesystem::path &node_path);

// CSV text with header language,date,nodes,edges and one row per entry,
// sorted by (language, date).
std::string GrowthSeriesCsv(std::vector<GraphStats> stats);

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-12;  // on the L1 change between iterations
  int max_iterations = 200;
  // Nodes are split into this many contiguous partitions. Partial sums are
  // combined in partition order, so the result does not depend on
  // `threads`.
  int partitions = 16;
  int threads = 1;
};

struct PageRankResult {
  std::vector<double> scores;
  int iterations = 0;
  bool converged = false;
  double last_change = 0;
};

using DenseEdge = std::pair<uint32_t, uint32_t>;

// Power iteration with uniform teleport; the mass of nodes without
// out-links is spread uniformly. Self-loops count as out-links.
PageRankResult PageRank(size_t node_count, std::span<const DenseEdge> edges,
                        const PageRankOptions &options = {});

// A graph file pair loaded with dense node ids in node-file order.
struct DenseGraph {
  std::vector<int64_t> page_ids;
  std::vector<std::string> titles;
  std::vector<DenseEdge> edges;
};

DenseGraph LoadDenseGraph(const std::filesystem::path &edge_path,
                          const std::filesystem::path &node_path);

struct RankedArticle {
  std::string title;
  double score = 0;
};

// Descending score, ties broken by title. Keeps the first `top` entries
// (all when top is 0).
std::vector<RankedArticle> RankArticles(std::span<const std::string> titles,
                                        std::span<const double> scores,
                                        size_t top = 0);

// CSV text with header rank,title,score; scores in scientific notation
// with 6 significant digits.
std::string RankingCsv(std::span<const RankedArticle> ranking);

}  // namespace wikilinks

#endif  // WIKILINKS_ANALYTICS_H_
