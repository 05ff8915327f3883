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

#include <algorithm>
#include <barrier>
#include <cmath>
#include <cstdio>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "wikilinks/csv.h"
#include "wikilinks/error.h"
#include "wikilinks/graph.h"

namespace wikilinks {

namespace {

constexpr std::array<std::string_view, 4> kGrowthColumns = {
    "language", "date", "nodes", "edges"};
constexpr std::array<std::string_view, 3> kRankingColumns = {"rank", "title",
                                                             "score"};

}  // namespace

GraphStats ComputeStats(const std::string &language, Timestamp date,
                        const std::filesystem::path &edge_path,
                        const std::filesystem::path &node_path) {
  GraphStats stats{language, date, 0, 0};
  CsvRow row;

  CsvReader nodes = CsvReader::Open(node_path.string());
  nodes.ExpectHeader(kNodeColumns);
  while (nodes.Next(&row)) {
    nodes.RequireColumns(row, kNodeColumns.size());
    nodes.GetInt(row, 0);
    ++stats.node_count;
  }

  CsvReader edges = CsvReader::Open(edge_path.string());
  edges.ExpectHeader(kEdgeColumns);
  while (edges.Next(&row)) {
    edges.RequireColumns(row, kEdgeColumns.size());
    edges.GetInt(row, 0);
    edges.GetInt(row, 2);
    ++stats.edge_count;
  }
  return stats;
}

std::string GrowthSeriesCsv(std::vector<GraphStats> stats) {
  std::sort(stats.begin(), stats.end(),
            [](const GraphStats &a, const GraphStats &b) {
              return std::tie(a.language, a.date) <
                     std::tie(b.language, b.date);
            });
  std::string out;
  AppendCsvHeader(kGrowthColumns, &out);
  for (const GraphStats &s : stats) {
    const std::string date = FormatDate(s.date);
    const std::string nodes = std::to_string(s.node_count);
    const std::string edges = std::to_string(s.edge_count);
    AppendCsvRow({s.language, date, nodes, edges}, &out);
  }
  return out;
}

PageRankResult PageRank(size_t n, std::span<const DenseEdge> edges,
                        const PageRankOptions &options) {
  const double d = options.damping;
  if (!(d > 0 && d < 1)) throw ConfigError("damping must be in (0, 1)");
  if (options.max_iterations < 1) {
    throw ConfigError("max_iterations must be positive");
  }
  PageRankResult result;
  if (n == 0) {
    result.converged = true;
    return result;
  }

  // In-edge CSR: sources of v are sources[offsets[v] .. offsets[v+1]).
  std::vector<uint32_t> out_degree(n, 0);
  std::vector<size_t> offsets(n + 1, 0);
  for (const auto &[from, to] : edges) {
    if (from >= n || to >= n) throw Error("edge endpoint out of range");
    ++out_degree[from];
    ++offsets[to + 1];
  }
  for (size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<uint32_t> sources(edges.size());
  {
    std::vector<size_t> fill(offsets.begin(), offsets.end() - 1);
    for (const auto &[from, to] : edges) sources[fill[to]++] = from;
    for (size_t v = 0; v < n; ++v) {
      std::sort(sources.begin() + offsets[v], sources.begin() + offsets[v + 1]);
    }
  }

  const size_t partitions = std::clamp<size_t>(
      static_cast<size_t>(std::max(options.partitions, 1)), 1, n);
  const size_t threads = std::clamp<size_t>(
      static_cast<size_t>(std::max(options.threads, 1)), 1, partitions);
  auto begin_of = [&](size_t p) { return p * n / partitions; };

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n, 0);
  std::vector<double> contrib(n, 0);
  std::vector<double> dangling_part(partitions, 0);
  std::vector<double> change_part(partitions, 0);
  double teleport = 0;
  bool done = false;
  int phase = 0;

  auto on_phase_end = [&]() noexcept {
    if (phase == 0) {
      double dangling = 0;
      for (double v : dangling_part) dangling += v;
      teleport = (1 - d) / static_cast<double>(n) +
                 d * dangling / static_cast<double>(n);
      phase = 1;
      return;
    }
    double change = 0;
    for (double v : change_part) change += v;
    x.swap(next);
    ++result.iterations;
    result.last_change = change;
    if (change < options.tolerance) {
      result.converged = true;
      done = true;
    } else if (result.iterations >= options.max_iterations) {
      done = true;
    }
    phase = 0;
  };
  std::barrier sync(static_cast<std::ptrdiff_t>(threads), on_phase_end);

  auto worker = [&](size_t tid) {
    while (true) {
      for (size_t p = tid; p < partitions; p += threads) {
        double dangling = 0;
        for (size_t u = begin_of(p); u < begin_of(p + 1); ++u) {
          if (out_degree[u] == 0) {
            dangling += x[u];
          } else {
            contrib[u] = x[u] / out_degree[u];
          }
        }
        dangling_part[p] = dangling;
      }
      sync.arrive_and_wait();
      for (size_t p = tid; p < partitions; p += threads) {
        double change = 0;
        for (size_t v = begin_of(p); v < begin_of(p + 1); ++v) {
          double sum = 0;
          for (size_t k = offsets[v]; k < offsets[v + 1]; ++k) {
            sum += contrib[sources[k]];
          }
          next[v] = teleport + d * sum;
          change += std::fabs(next[v] - x[v]);
        }
        change_part[p] = change;
      }
      sync.arrive_and_wait();
      if (done) return;
    }
  };

  {
    std::vector<std::jthread> pool;
    for (size_t t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
  }
  result.scores = std::move(x);
  return result;
}

DenseGraph LoadDenseGraph(const std::filesystem::path &edge_path,
                          const std::filesystem::path &node_path) {
  DenseGraph graph;
  std::unordered_map<int64_t, uint32_t> index;
  CsvRow row;

  CsvReader nodes = CsvReader::Open(node_path.string());
  nodes.ExpectHeader(kNodeColumns);
  while (nodes.Next(&row)) {
    nodes.RequireColumns(row, kNodeColumns.size());
    const int64_t id = nodes.GetInt(row, 0);
    const auto dense = static_cast<uint32_t>(graph.page_ids.size());
    if (!index.emplace(id, dense).second) {
      nodes.Fail("duplicate page_id " + std::to_string(id));
    }
    graph.page_ids.push_back(id);
    graph.titles.push_back(nodes.GetString(row, 1));
  }

  CsvReader edges = CsvReader::Open(edge_path.string());
  edges.ExpectHeader(kEdgeColumns);
  while (edges.Next(&row)) {
    edges.RequireColumns(row, kEdgeColumns.size());
    auto lookup = [&](size_t column) {
      const int64_t id = edges.GetInt(row, column);
      auto it = index.find(id);
      if (it == index.end()) {
        edges.Fail("page_id " + std::to_string(id) + " not in node file");
      }
      return it->second;
    };
    const uint32_t from = lookup(0);
    const uint32_t to = lookup(2);
    graph.edges.emplace_back(from, to);
  }
  return graph;
}

std::vector<RankedArticle> RankArticles(std::span<const std::string> titles,
                                        std::span<const double> scores,
                                        size_t top) {
  if (titles.size() != scores.size()) {
    throw Error("titles and scores differ in length");
  }
  std::vector<RankedArticle> ranking;
  ranking.reserve(titles.size());
  for (size_t i = 0; i < titles.size(); ++i) {
    ranking.push_back(RankedArticle{titles[i], scores[i]});
  }
  auto before = [](const RankedArticle &a, const RankedArticle &b) {
    if (a.score != b.score) return a.score > b.score;
    return a.title < b.title;
  };
  if (top > 0 && top < ranking.size()) {
    std::partial_sort(ranking.begin(), ranking.begin() + top, ranking.end(),
                      before);
    ranking.resize(top);
  } else {
    std::sort(ranking.begin(), ranking.end(), before);
  }
  return ranking;
}

std::string RankingCsv(std::span<const RankedArticle> ranking) {
  std::string out;
  AppendCsvHeader(kRankingColumns, &out);
  char score[32];
  for (size_t i = 0; i < ranking.size(); ++i) {
    std::snprintf(score, sizeof(score), "%.5e", ranking[i].score);
    const std::string rank = std::to_string(i + 1);
    AppendCsvRow({rank, ranking[i].title, score}, &out);
  }
  return out;
}

}  // namespace wikilinks
