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

#include "wikilinks/stages.h"

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "parallel.h"
#include "wikilinks/dump_reader.h"
#include "wikilinks/error.h"
#include "wikilinks/external_sort.h"
#include "wikilinks/graph.h"

namespace wikilinks {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr size_t kManifestIssues = 100;

class Progress {
 public:
  explicit Progress(std::ostream *out) : out_(out) {}

  void Emit(const json &record) {
    if (out_ == nullptr) return;
    std::lock_guard<std::mutex> lock(mu_);
    *out_ << record.dump() << '\n';
    out_->flush();
  }

 private:
  std::ostream *out_;
  std::mutex mu_;
};

fs::path Require(const fs::path &path) {
  if (!fs::is_regular_file(path)) throw MissingInputError(path.string());
  return path;
}

std::string DateName(SnapshotDate date) { return FormatDate(date.instant); }

// Output of one page, in the order the files expect it.
struct PageBlock {
  std::string links;
  std::string revisions;
  RunSummary summary;
};

class CsvBlockSink : public RawLinkSink {
 public:
  explicit CsvBlockSink(std::string *out) : out_(out) {}
  void Write(const RawLinkRecord &record) override {
    AppendRawLinkRow(record, out_);
  }

 private:
  std::string *out_;
};

// One input dump and its two output files. Pages are processed out of
// order by the workers and written back in dump order, so the files do
// not depend on the number of workers.
class Shard {
 public:
  Shard(const fs::path &links, const fs::path &revisions, size_t window)
      : links_(links), revisions_(revisions), window_(window) {
    std::string header;
    AppendCsvHeader(kRawLinkColumns, &header);
    links_.Write(header);
    header.clear();
    AppendCsvHeader(kRevisionColumns, &header);
    revisions_.Write(header);
  }

  // Blocks the reader while too many pages are in flight.
  template <typename Stop>
  void WaitForSlot(uint64_t seq, Stop stop) {
    std::unique_lock<std::mutex> lock(mu_);
    cv_.wait(lock, [&] { return seq < next_write_ + window_ || stop(); });
  }

  void Deliver(uint64_t seq, PageBlock block) {
    std::lock_guard<std::mutex> lock(mu_);
    pending_.emplace(seq, std::move(block));
    while (!pending_.empty() && pending_.begin()->first == next_write_) {
      PageBlock &ready = pending_.begin()->second;
      links_.Write(ready.links);
      revisions_.Write(ready.revisions);
      summary_ += ready.summary;
      pending_.erase(pending_.begin());
      ++next_write_;
    }
    cv_.notify_all();
  }

  void Wake() {
    std::lock_guard<std::mutex> lock(mu_);
    cv_.notify_all();
  }

  void FinishReading(uint64_t pages, const DumpReader &reader) {
    std::lock_guard<std::mutex> lock(mu_);
    total_ = pages;
    pages_seen_ = reader.pages_seen();
    summary_.errors += reader.error_count();
    summary_.warnings += reader.warning_count();
    issues_ = reader.issues();
  }

  // Called once all workers are done.
  json Commit() {
    if (next_write_ != total_) throw Error("shard incomplete");
    json entry;
    entry["rawwikilinks"] = links_.path().filename().string();
    entry["revisions"] = revisions_.path().filename().string();
    entry["rawwikilinks_sha256"] = links_.Commit();
    entry["revisions_sha256"] = revisions_.Commit();
    entry["page_elements"] = pages_seen_;
    return entry;
  }

  const RunSummary &summary() const { return summary_; }
  const std::vector<DumpIssue> &issues() const { return issues_; }

 private:
  OutputFile links_;
  OutputFile revisions_;
  size_t window_;
  std::mutex mu_;
  std::condition_variable cv_;
  uint64_t next_write_ = 0;
  uint64_t total_ = 0;
  std::map<uint64_t, PageBlock> pending_;
  RunSummary summary_;
  int64_t pages_seen_ = 0;
  std::vector<DumpIssue> issues_;
};

struct WorkItem {
  size_t shard = 0;
  uint64_t seq = 0;
  PageHistory page;
};

json SummaryJson(const RunSummary &s) {
  return json{{"pages", s.pages},
              {"revisions", s.revisions},
              {"links", s.links},
              {"redirect_revisions", s.redirect_revisions},
              {"errors", s.errors},
              {"warnings", s.warnings},
              {"redirect_keyword_without_link",
               s.redirect_keyword_without_link}};
}

void WriteText(const fs::path &path, std::string_view text) {
  OutputFile file(path, OutputFile::Compression::kNone);
  file.Write(text);
  file.Commit();
}

struct ShardFiles {
  fs::path links;
  fs::path revisions;
};

std::vector<ShardFiles> ReadManifest(const RunConfig &config) {
  const fs::path path =
      Require(config.output_dir / FileNames{config.language}.Manifest());
  std::ifstream in(path);
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception &e) {
    throw Error(path.string() + ": " + e.what());
  }
  std::vector<ShardFiles> shards;
  for (const json &entry : manifest.at("shards")) {
    shards.push_back(ShardFiles{
        Require(config.output_dir /
                entry.at("rawwikilinks").get<std::string>()),
        Require(config.output_dir / entry.at("revisions").get<std::string>())});
  }
  return shards;
}

// Removes a directory tree when it goes out of scope.
class TempDir {
 public:
  explicit TempDir(fs::path path) : path_(std::move(path)) {
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ignored;
    fs::remove_all(path_, ignored);
  }
  const fs::path &path() const { return path_; }

 private:
  fs::path path_;
};

void Consider(std::unordered_map<int64_t, RedirectEvent> *best,
              RedirectEvent event) {
  auto [it, inserted] = best->try_emplace(event.page_id, event);
  if (inserted) return;
  const RedirectEvent &old = it->second;
  if (std::tie(event.timestamp, event.revision_id) >
      std::tie(old.timestamp, old.revision_id)) {
    it->second = std::move(event);
  }
}

Snapshot SelectFromRevisionFiles(const std::vector<ShardFiles> &shards,
                                 SnapshotDate date) {
  std::unordered_map<int64_t, RedirectEvent> best;
  std::vector<RedirectEvent> group;
  auto flush = [&] {
    if (auto i = LatestBefore(group, date)) Consider(&best, group[*i]);
    group.clear();
  };
  CsvRow row;
  for (const ShardFiles &shard : shards) {
    CsvReader reader = CsvReader::Open(shard.revisions.string());
    reader.ExpectHeader(kRevisionColumns);
    while (reader.Next(&row)) {
      RedirectEvent event = ParseRedirectEventRow(row, reader);
      if (!group.empty() && group.back().page_id != event.page_id) flush();
      group.push_back(std::move(event));
    }
    flush();
  }
  std::vector<RedirectEvent> selected;
  selected.reserve(best.size());
  for (auto &[id, event] : best) selected.push_back(std::move(event));
  return ResolveSelected(std::move(selected), date);
}

void SnapshotOneDate(const RunConfig &config,
                     const std::vector<ShardFiles> &shards, SnapshotDate date,
                     Progress *progress) {
  const FileNames names{config.language};
  const Snapshot snapshot = SelectFromRevisionFiles(shards, date);

  OutputFile resolved(config.output_dir / names.ResolvedRedirects(date));
  OutputFile cycles(config.output_dir / names.Cycles(date));
  std::string buffer;
  std::string cycle_buffer;
  AppendCsvHeader(kResolvedRedirectColumns, &buffer);
  AppendCsvHeader(kCycleColumns, &cycle_buffer);
  int64_t redirects = 0, cycle_count = 0, dangling = 0;
  for (const ResolvedPage &page : snapshot.pages()) {
    AppendResolvedPageRow(page, &buffer);
    if (page.is_redirect) ++redirects;
    if (page.resolution == Resolution::kDanglingTarget) ++dangling;
    if (page.resolution == Resolution::kCycle) {
      ++cycle_count;
      const std::string id = std::to_string(page.page_id);
      AppendCsvRow({id, page.title, page.immediate_target}, &cycle_buffer);
    }
    if (buffer.size() > (1 << 20)) {
      resolved.Write(buffer);
      buffer.clear();
    }
  }
  resolved.Write(buffer);
  cycles.Write(cycle_buffer);

  OutputFile links(config.output_dir / names.LinkSnapshot(date));
  buffer.clear();
  AppendCsvHeader(kSnapshotLinkColumns, &buffer);
  int64_t link_count = 0, active = 0;
  CsvRow row;
  for (const ShardFiles &shard : shards) {
    CsvReader reader = CsvReader::Open(shard.links.string());
    reader.ExpectHeader(kRawLinkColumns);
    while (reader.Next(&row)) {
      // Cheap check before parsing the whole row.
      reader.RequireColumns(row, kRawLinkColumns.size());
      const ResolvedPage *page = snapshot.FindId(reader.GetInt(row, 0));
      if (page == nullptr || page->revision_id != reader.GetInt(row, 2)) {
        continue;
      }
      auto link = ToSnapshotLink(ParseRawLinkRow(row, reader), snapshot);
      if (!link) continue;
      ++link_count;
      if (link->is_active) ++active;
      AppendSnapshotLinkRow(*link, &buffer);
      if (buffer.size() > (1 << 20)) {
        links.Write(buffer);
        buffer.clear();
      }
    }
  }
  links.Write(buffer);

  resolved.Commit();
  cycles.Commit();
  links.Commit();
  progress->Emit({{"stage", "snapshot"},
                  {"date", DateName(date)},
                  {"pages", snapshot.pages().size()},
                  {"redirects", redirects},
                  {"dangling", dangling},
                  {"cycles", cycle_count},
                  {"links", link_count},
                  {"active_links", active}});
}

Snapshot ReadResolvedRedirects(const fs::path &path, SnapshotDate date) {
  CsvReader reader = CsvReader::Open(path.string());
  reader.ExpectHeader(kResolvedRedirectColumns);
  std::vector<ResolvedPage> pages;
  CsvRow row;
  while (reader.Next(&row)) pages.push_back(ParseResolvedPageRow(row, reader));
  return Snapshot(date, std::move(pages));
}

uint64_t KeyPart(int64_t page_id) {
  if (page_id < 0) throw Error("negative page id " + std::to_string(page_id));
  return static_cast<uint64_t>(page_id);
}

void GraphOneDate(const RunConfig &config, SnapshotDate date,
                  size_t sort_budget, Progress *progress) {
  const FileNames names{config.language};
  const fs::path resolved_path =
      Require(config.output_dir / names.ResolvedRedirects(date));
  const fs::path links_path =
      Require(config.output_dir / names.LinkSnapshot(date));
  const Snapshot snapshot = ReadResolvedRedirects(resolved_path, date);
  const EdgeResolver resolver(snapshot,
                              GraphOptions{config.drop_self_loops});

  TempDir temp(config.output_dir / (".sort-graph-" + DateName(date)));
  ExternalSorter sorter(temp.path(), sort_budget);
  CsvReader reader = CsvReader::Open(links_path.string());
  reader.ExpectHeader(kSnapshotLinkColumns);
  CsvRow row;
  while (reader.Next(&row)) {
    const SnapshotLink link = ParseSnapshotLinkRow(row, reader);
    if (const ResolvedPage *to = resolver.LinkTarget(link)) {
      sorter.Add(SortKey{KeyPart(link.page_id), KeyPart(to->page_id)}, {});
    }
  }
  for (const ResolvedPage &page : snapshot.pages()) {
    if (const ResolvedPage *to = resolver.RedirectTarget(page)) {
      sorter.Add(SortKey{KeyPart(page.page_id), KeyPart(to->page_id)}, {});
    }
  }

  OutputFile edges(config.output_dir / names.Edges(date));
  std::string buffer;
  AppendCsvHeader(kEdgeColumns, &buffer);
  auto sorted = sorter.Finish();
  SortKey key, last;
  std::string payload;
  bool first = true;
  int64_t edge_count = 0;
  while (sorted->Next(&key, &payload)) {
    if (!first && key == last) continue;
    first = false;
    last = key;
    const ResolvedPage *from = snapshot.FindId(static_cast<int64_t>(key.major));
    const ResolvedPage *to = snapshot.FindId(static_cast<int64_t>(key.minor));
    AppendEdgeRow(EdgeRecord{from->page_id, from->title, to->page_id,
                             to->title},
                  &buffer);
    ++edge_count;
    if (buffer.size() > (1 << 20)) {
      edges.Write(buffer);
      buffer.clear();
    }
  }
  edges.Write(buffer);
  edges.Commit();

  std::vector<NodeRecord> nodes;
  nodes.reserve(snapshot.pages().size());
  for (const ResolvedPage &page : snapshot.pages()) {
    nodes.push_back(NodeRecord{page.page_id, page.title});
  }
  EmitNodes(nodes, config.output_dir / names.Nodes(date));
  progress->Emit({{"stage", "graph"},
                  {"date", DateName(date)},
                  {"nodes", nodes.size()},
                  {"edges", edge_count},
                  {"sort_runs", sorter.spilled_runs()}});
}

}  // namespace

void ValidateConfig(const RunConfig &config) {
  if (config.jobs < 1) throw ConfigError("--jobs must be at least 1");
  if (config.language.empty()) throw ConfigError("--lang must not be empty");
  for (size_t i = 1; i < config.dates.size(); ++i) {
    if (!(config.dates[i - 1] < config.dates[i])) {
      throw ConfigError("snapshot dates must be strictly increasing");
    }
  }
}

std::string FileNames::RawLinks(size_t shard) const {
  char index[16];
  std::snprintf(index, sizeof(index), "%04zu", shard);
  return language + "wiki.rawwikilinks." + index + ".csv.gz";
}

std::string FileNames::Revisions(size_t shard) const {
  char index[16];
  std::snprintf(index, sizeof(index), "%04zu", shard);
  return language + "wiki.revisions." + index + ".csv.gz";
}

std::string FileNames::Manifest() const {
  return language + "wiki.extract-manifest.json";
}

std::string FileNames::ResolvedRedirects(SnapshotDate date) const {
  return language + "wiki.resolved-redirects." + DateName(date) + ".csv.gz";
}

std::string FileNames::LinkSnapshot(SnapshotDate date) const {
  return language + "wiki.wikilinksnapshot." + DateName(date) + ".csv.gz";
}

std::string FileNames::Cycles(SnapshotDate date) const {
  return language + "wiki.redirect-cycles." + DateName(date) + ".csv.gz";
}

std::string FileNames::Edges(SnapshotDate date) const {
  return language + "wiki.wikilinkgraph." + DateName(date) + ".csv.gz";
}

std::string FileNames::Nodes(SnapshotDate date) const {
  return language + "wiki.wikilinkgraph-nodes." + DateName(date) + ".csv.gz";
}

std::string FileNames::PageRank(SnapshotDate date) const {
  return language + "wiki.pagerank." + DateName(date) + ".csv";
}

std::string FileNames::Growth() const { return language + "wiki.growth.csv"; }

ExtractResult RunExtract(const RunConfig &config) {
  ValidateConfig(config);
  if (config.inputs.empty()) throw ConfigError("no input dumps given");
  for (const std::string &input : config.inputs) Require(input);
  const LanguageProfile profile =
      LanguageProfile::Resolve(config.language, config.profiles_path);
  const ExtractOptions extract_options{config.strip_inert_spans};
  const FileNames names{config.language};
  fs::create_directories(config.output_dir);
  Progress progress(config.log);

  const size_t jobs = static_cast<size_t>(config.jobs);
  const size_t window = 4 * jobs + 4;
  std::vector<std::unique_ptr<Shard>> shards;
  for (size_t i = 0; i < config.inputs.size(); ++i) {
    shards.push_back(std::make_unique<Shard>(
        config.output_dir / names.RawLinks(i),
        config.output_dir / names.Revisions(i), window));
  }

  internal::BoundedQueue<WorkItem> queue(2 * jobs);
  internal::FirstError error;
  auto fail = [&] {
    error.Capture();
    queue.Close();
    for (auto &shard : shards) shard->Wake();
  };
  auto stopped = [&] { return error.failed(); };

  std::atomic<size_t> next_input{0};
  {
    std::vector<std::jthread> workers;
    for (size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        while (auto item = queue.Pop()) {
          if (error.failed()) continue;
          try {
            PageBlock block;
            CsvBlockSink sink(&block.links);
            std::vector<RedirectEvent> events;
            ProcessPage(item->page, profile, extract_options, &sink, &events,
                        &block.summary);
            for (const RedirectEvent &e : events) {
              AppendRedirectEventRow(e, &block.revisions);
            }
            shards[item->shard]->Deliver(item->seq, std::move(block));
          } catch (...) {
            fail();
          }
        }
      });
    }
    {
      std::vector<std::jthread> readers;
      const size_t reader_count = std::min(jobs, shards.size());
      for (size_t r = 0; r < reader_count; ++r) {
        readers.emplace_back([&] {
          for (size_t i = next_input++; i < shards.size() && !stopped();
               i = next_input++) {
            try {
              auto reader = OpenDump(config.inputs[i], config.input);
              NamespaceFilter articles(reader.get(), 0);
              uint64_t seq = 0;
              while (!stopped()) {
                auto page = articles.Next();
                if (!page) break;
                shards[i]->WaitForSlot(seq, stopped);
                if (!queue.Push(WorkItem{i, seq, std::move(*page)})) break;
                ++seq;
              }
              shards[i]->FinishReading(seq, *reader);
              progress.Emit({{"stage", "extract"},
                             {"input", fs::path(config.inputs[i])
                                           .filename()
                                           .string()},
                             {"event", "read"},
                             {"pages", seq},
                             {"page_elements", reader->pages_seen()}});
            } catch (...) {
              fail();
            }
          }
        });
      }
    }
    queue.Close();
  }
  error.Rethrow();

  ExtractResult result;
  json manifest;
  manifest["language"] = config.language;
  manifest["strip_inert_spans"] = config.strip_inert_spans;
  json issues = json::array();
  for (size_t i = 0; i < shards.size(); ++i) {
    json entry = shards[i]->Commit();
    entry["input"] = fs::path(config.inputs[i]).filename().string();
    entry["counts"] = SummaryJson(shards[i]->summary());
    result.summary += shards[i]->summary();
    result.files.push_back(entry["rawwikilinks"]);
    result.files.push_back(entry["revisions"]);
    manifest["shards"].push_back(std::move(entry));
    for (const DumpIssue &issue : shards[i]->issues()) {
      if (issues.size() >= kManifestIssues) break;
      issues.push_back(
          {{"shard", i},
           {"severity", issue.severity == DumpIssue::Severity::kError
                            ? "error"
                            : "warning"},
           {"page_index", issue.page_index},
           {"byte_offset", issue.byte_offset},
           {"page_title", issue.page_title},
           {"message", issue.message}});
    }
  }
  manifest["totals"] = SummaryJson(result.summary);
  manifest["issues"] = std::move(issues);
  WriteText(config.output_dir / names.Manifest(), manifest.dump(2) + "\n");
  result.files.push_back(names.Manifest());
  progress.Emit({{"stage", "extract"},
                 {"event", "done"},
                 {"counts", SummaryJson(result.summary)}});
  return result;
}

void RunSnapshot(const RunConfig &config) {
  ValidateConfig(config);
  const std::vector<ShardFiles> shards = ReadManifest(config);
  Progress progress(config.log);
  internal::ParallelFor(config.dates.size(), config.jobs, [&](size_t i) {
    SnapshotOneDate(config, shards, config.dates[i], &progress);
  });
}

void RunGraph(const RunConfig &config) {
  ValidateConfig(config);
  const FileNames names{config.language};
  for (SnapshotDate date : config.dates) {
    Require(config.output_dir / names.ResolvedRedirects(date));
    Require(config.output_dir / names.LinkSnapshot(date));
  }
  Progress progress(config.log);
  const size_t concurrent = std::min<size_t>(
      std::max<size_t>(config.dates.size(), 1),
      static_cast<size_t>(config.jobs));
  const size_t budget =
      std::max<size_t>(config.sort_memory_bytes / concurrent, 1 << 16);
  internal::ParallelFor(config.dates.size(), config.jobs, [&](size_t i) {
    GraphOneDate(config, config.dates[i], budget, &progress);
  });
}

void RunPageRank(const RunConfig &config) {
  ValidateConfig(config);
  const FileNames names{config.language};
  Progress progress(config.log);
  PageRankOptions options = config.pagerank;
  options.threads = config.jobs;
  for (SnapshotDate date : config.dates) {
    const DenseGraph graph =
        LoadDenseGraph(Require(config.output_dir / names.Edges(date)),
                       Require(config.output_dir / names.Nodes(date)));
    const PageRankResult result =
        PageRank(graph.titles.size(), graph.edges, options);
    const auto ranking = RankArticles(graph.titles, result.scores, config.top);
    WriteText(config.output_dir / names.PageRank(date), RankingCsv(ranking));
    progress.Emit({{"stage", "pagerank"},
                   {"date", DateName(date)},
                   {"nodes", graph.titles.size()},
                   {"iterations", result.iterations},
                   {"converged", result.converged},
                   {"last_change", result.last_change}});
  }
}

std::vector<GraphStats> RunStats(const RunConfig &config) {
  ValidateConfig(config);
  const FileNames names{config.language};
  std::vector<GraphStats> stats;
  for (SnapshotDate date : config.dates) {
    const fs::path edges = config.output_dir / names.Edges(date);
    if (!fs::is_regular_file(edges)) continue;
    stats.push_back(ComputeStats(config.language, date.instant, edges,
                                 Require(config.output_dir / names.Nodes(date))));
  }
  if (stats.empty()) {
    const SnapshotDate first =
        config.dates.empty() ? SnapshotDate{} : config.dates.front();
    throw MissingInputError((config.output_dir / names.Edges(first)).string());
  }
  WriteText(config.output_dir / names.Growth(), GrowthSeriesCsv(stats));
  Progress progress(config.log);
  progress.Emit({{"stage", "stats"}, {"rows", stats.size()}});
  return stats;
}

std::vector<ChecksumCheck> RunVerify(const RunConfig &config) {
  if (!fs::is_directory(config.output_dir)) {
    throw MissingInputError(config.output_dir.string());
  }
  return VerifyChecksums(config.output_dir);
}

}  // namespace wikilinks
