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

#include <algorithm>
#include <tuple>

#include "wikilinks/error.h"
#include "wikilinks/output.h"

namespace wikilinks {

const std::array<std::string_view, 4> kEdgeColumns = {
    "page_id_from", "page_title_from", "page_id_to", "page_title_to"};
const std::array<std::string_view, 2> kNodeColumns = {"page_id",
                                                      "page_title"};

const ResolvedPage *EdgeResolver::Follow(const ResolvedPage &page) const {
  if (!page.is_redirect) return &page;
  if (page.resolution == Resolution::kDanglingTarget || !page.final_target) {
    return nullptr;
  }
  const ResolvedPage *target = snapshot_.FindTitle(*page.final_target);
  if (target == nullptr) {
    throw Error("redirect '" + page.title + "' resolves to '" +
                *page.final_target + "', which is not in the snapshot");
  }
  return target;
}

bool EdgeResolver::Keep(int64_t from, const ResolvedPage *to) const {
  if (to == nullptr) return false;
  return !(options_.drop_self_loops && to->page_id == from);
}

const ResolvedPage *EdgeResolver::LinkTarget(const SnapshotLink &link) const {
  if (!link.is_active) return nullptr;
  const ResolvedPage *source = snapshot_.FindId(link.page_id);
  if (source == nullptr) {
    throw Error("link from page " + std::to_string(link.page_id) +
                ", which is not in the snapshot");
  }
  if (source->is_redirect) return nullptr;
  const ResolvedPage *target = snapshot_.FindTitle(link.link);
  if (target == nullptr) {
    throw Error("active link to '" + link.link +
                "', which is not in the snapshot");
  }
  const ResolvedPage *end = Follow(*target);
  return Keep(link.page_id, end) ? end : nullptr;
}

const ResolvedPage *EdgeResolver::RedirectTarget(
    const ResolvedPage &redirect) const {
  if (!redirect.is_redirect) return nullptr;
  const ResolvedPage *end = Follow(redirect);
  return Keep(redirect.page_id, end) ? end : nullptr;
}

Graph BuildGraph(std::span<const SnapshotLink> links, const Snapshot &snapshot,
                 const GraphOptions &options) {
  EdgeResolver resolver(snapshot, options);
  std::vector<std::pair<const ResolvedPage *, const ResolvedPage *>> pairs;
  for (const SnapshotLink &link : links) {
    if (const ResolvedPage *to = resolver.LinkTarget(link)) {
      pairs.emplace_back(snapshot.FindId(link.page_id), to);
    }
  }
  Graph graph;
  for (const ResolvedPage &page : snapshot.pages()) {
    graph.nodes.push_back(NodeRecord{page.page_id, page.title});
    if (const ResolvedPage *to = resolver.RedirectTarget(page)) {
      pairs.emplace_back(&page, to);
    }
  }
  auto key = [](const auto &p) {
    return std::make_pair(p.first->page_id, p.second->page_id);
  };
  std::sort(pairs.begin(), pairs.end(),
            [&](const auto &a, const auto &b) { return key(a) < key(b); });
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [&](const auto &a, const auto &b) {
                            return key(a) == key(b);
                          }),
              pairs.end());
  graph.edges.reserve(pairs.size());
  for (const auto &[from, to] : pairs) {
    graph.edges.push_back(
        EdgeRecord{from->page_id, from->title, to->page_id, to->title});
  }
  return graph;
}

void AppendEdgeRow(const EdgeRecord &e, std::string *out) {
  const std::string from = std::to_string(e.page_id_from);
  const std::string to = std::to_string(e.page_id_to);
  AppendCsvRow({from, e.page_title_from, to, e.page_title_to}, out);
}

void AppendNodeRow(const NodeRecord &n, std::string *out) {
  const std::string id = std::to_string(n.page_id);
  AppendCsvRow({id, n.page_title}, out);
}

std::string EmitEdges(std::span<const EdgeRecord> edges,
                      const std::filesystem::path &path) {
  std::vector<const EdgeRecord *> sorted;
  sorted.reserve(edges.size());
  for (const EdgeRecord &e : edges) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const EdgeRecord *a, const EdgeRecord *b) {
              return std::tie(a->page_id_from, a->page_id_to) <
                     std::tie(b->page_id_from, b->page_id_to);
            });
  OutputFile file(path);
  std::string buffer;
  AppendCsvHeader(kEdgeColumns, &buffer);
  for (const EdgeRecord *e : sorted) {
    AppendEdgeRow(*e, &buffer);
    if (buffer.size() > (1 << 20)) {
      file.Write(buffer);
      buffer.clear();
    }
  }
  file.Write(buffer);
  return file.Commit();
}

std::string EmitNodes(std::span<const NodeRecord> nodes,
                      const std::filesystem::path &path) {
  OutputFile file(path);
  std::string buffer;
  AppendCsvHeader(kNodeColumns, &buffer);
  for (const NodeRecord &n : nodes) {
    AppendNodeRow(n, &buffer);
    if (buffer.size() > (1 << 20)) {
      file.Write(buffer);
      buffer.clear();
    }
  }
  file.Write(buffer);
  return file.Commit();
}

}  // namespace wikilinks
