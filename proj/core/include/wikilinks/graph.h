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

#ifndef WIKILINKS_GRAPH_H_
#define WIKILINKS_GRAPH_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wikilinks/snapshot.h"

namespace wikilinks {

struct EdgeRecord {
  int64_t page_id_from = 0;
  std::string page_title_from;
  int64_t page_id_to = 0;
  std::string page_title_to;

  bool operator==(const EdgeRecord &) const = default;
};

struct NodeRecord {
  int64_t page_id = 0;
  std::string page_title;

  bool operator==(const NodeRecord &) const = default;
};

struct GraphOptions {
  bool drop_self_loops = false;
};

// Maps links and redirect pages of one snapshot to graph edges. Links to
// redirects are replaced by the redirect's final target; links that are
// inactive, that start from a redirect page, or that end in a dangling
// redirect produce no edge.
class EdgeResolver {
 public:
  EdgeResolver(const Snapshot &snapshot, GraphOptions options)
      : snapshot_(snapshot), options_(options) {}

  // Target page of a link, or nullptr. Throws Error when the snapshot is
  // inconsistent with the link (unknown source page, unknown active target).
  const ResolvedPage *LinkTarget(const SnapshotLink &link) const;

  // The single outgoing edge target of a redirect page, or nullptr.
  const ResolvedPage *RedirectTarget(const ResolvedPage &redirect) const;

 private:
  const ResolvedPage *Follow(const ResolvedPage &page) const;
  bool Keep(int64_t from, const ResolvedPage *to) const;

  const Snapshot &snapshot_;
  GraphOptions options_;
};

struct Graph {
  std::vector<NodeRecord> nodes;  // every snapshot page, by page_id
  std::vector<EdgeRecord> edges;  // unique, by (page_id_from, page_id_to)
};

Graph BuildGraph(std::span<const SnapshotLink> links, const Snapshot &snapshot,
                 const GraphOptions &options = {});

extern const std::array<std::string_view, 4> kEdgeColumns;
extern const std::array<std::string_view, 2> kNodeColumns;

void AppendEdgeRow(const EdgeRecord &edge, std::string *out);
void AppendNodeRow(const NodeRecord &node, std::string *out);

// Writes a gzip CSV (header plus rows sorted by page_id_from, page_id_to)
// and its checksum sidecar. Returns the digest.
std::string EmitEdges(std::span<const EdgeRecord> edges,
                      const std::filesystem::path &path);
std::string EmitNodes(std::span<const NodeRecord> nodes,
                      const std::filesystem::path &path);

}  // namespace wikilinks

#endif  // WIKILINKS_GRAPH_H_
