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

// The pipeline stages. Each stage reads only files written by earlier
// stages, so any of them can be rerun on its own.

#ifndef WIKILINKS_STAGES_H_
#define WIKILINKS_STAGES_H_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "wikilinks/analytics.h"
#include "wikilinks/input.h"
#include "wikilinks/output.h"
#include "wikilinks/revision_pipeline.h"
#include "wikilinks/snapshot.h"

namespace wikilinks {

struct RunConfig {
  std::string language = "en";
  std::vector<std::string> inputs;
  std::vector<SnapshotDate> dates = DefaultSnapshotDates();
  int jobs = 1;
  std::filesystem::path output_dir = ".";
  bool strip_inert_spans = false;
  bool drop_self_loops = false;
  InputOptions input;
  std::string profiles_path;  // redirect keyword overrides (JSON)
  size_t sort_memory_bytes = size_t{256} << 20;
  PageRankOptions pagerank;
  size_t top = 0;  // ranking rows kept; 0 keeps all
  // Progress records, one JSON object per line. Null disables them.
  std::ostream *log = nullptr;
};

// Throws ConfigError unless dates are strictly increasing and jobs >= 1.
void ValidateConfig(const RunConfig &config);

// Output file names, relative to the output directory.
struct FileNames {
  std::string language;

  std::string RawLinks(size_t shard) const;
  std::string Revisions(size_t shard) const;
  std::string Manifest() const;
  std::string ResolvedRedirects(SnapshotDate date) const;
  std::string LinkSnapshot(SnapshotDate date) const;
  std::string Cycles(SnapshotDate date) const;
  std::string Edges(SnapshotDate date) const;
  std::string Nodes(SnapshotDate date) const;
  std::string PageRank(SnapshotDate date) const;
  std::string Growth() const;
};

struct ExtractResult {
  RunSummary summary;
  std::vector<std::string> files;
};

// Dumps -> RawWikilinks and revision files (one pair per input, in input
// order) plus a JSON manifest. Missing inputs are reported before any file
// is created.
ExtractResult RunExtract(const RunConfig &config);

// Revision and raw-link files -> ResolvedRedirects, redirect cycles and
// WikiLinkSnapshots for every date.
void RunSnapshot(const RunConfig &config);

// ResolvedRedirects and WikiLinkSnapshots -> edge and node files.
void RunGraph(const RunConfig &config);

void RunPageRank(const RunConfig &config);

// Growth series over the configured dates; dates without a graph are
// omitted. Throws MissingInputError when no graph exists at all.
std::vector<GraphStats> RunStats(const RunConfig &config);

// Recomputes every checksum sidecar in the output directory.
std::vector<ChecksumCheck> RunVerify(const RunConfig &config);

}  // namespace wikilinks

#endif  // WIKILINKS_STAGES_H_
