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

// Point-in-time views of the wiki: which pages existed at a snapshot date,
// where their redirects lead, and which links were in each page then.

#ifndef WIKILINKS_SNAPSHOT_H_
#define WIKILINKS_SNAPSHOT_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wikilinks/csv.h"
#include "wikilinks/revision_pipeline.h"
#include "wikilinks/timestamp.h"

namespace wikilinks {

// A revision belongs to the snapshot iff its timestamp is strictly before
// the instant.
struct SnapshotDate {
  Timestamp instant;

  bool Contains(Timestamp ts) const { return ts < instant; }
  auto operator<=>(const SnapshotDate &) const = default;
};

// March 1st, 00:00 UTC, of every year from 2001 to 2018.
std::vector<SnapshotDate> DefaultSnapshotDates();

// Index of the latest revision strictly before `date` among one page's
// events; equal timestamps go to the larger revision id. Input order does
// not matter.
std::optional<size_t> LatestBefore(std::span<const RedirectEvent> revisions,
                                   SnapshotDate date);

// page_id -> revision_id of each page's latest revision before `date`.
std::map<int64_t, int64_t> SelectSnapshotRevisions(
    std::span<const RedirectEvent> index, SnapshotDate date);

struct RedirectTarget {
  std::optional<std::string> title;  // normalized; absent if empty
  std::optional<std::string> tosection;
  bool operator==(const RedirectTarget &) const = default;
};

// Normalized title -> immediate target, for pages whose selected revision
// is a redirect.
using RedirectMap = std::unordered_map<std::string, RedirectTarget>;

RedirectMap BuildRedirectMap(std::span<const RedirectEvent> history,
                             const std::map<int64_t, int64_t> &selected,
                             SnapshotDate date);

enum class Resolution { kArticle, kResolved, kDanglingTarget, kCycle };

std::string_view ResolutionName(Resolution resolution);
std::optional<Resolution> ParseResolution(std::string_view name);

struct ChainEnd {
  Resolution resolution = Resolution::kArticle;
  std::optional<std::string> final_target;
  bool operator==(const ChainEnd &) const = default;
};

// Maximum number of redirect hops followed before giving up.
inline constexpr int kMaxRedirectDepth = 32;

// Follows every redirect in `redirects` to its end: an existing
// non-redirect title (resolved), a title that does not exist
// (dangling-target, no final target), or a title already visited (cycle,
// final target = the immediate target). Chains longer than
// kMaxRedirectDepth are treated as cycles.
std::unordered_map<std::string, ChainEnd> ResolveChains(
    const RedirectMap &redirects,
    const std::unordered_set<std::string> &existing);

struct ResolvedPage {
  int64_t page_id = 0;
  std::string title;  // as in the dump
  int64_t revision_id = 0;
  bool is_redirect = false;
  std::optional<std::string> immediate_target;
  std::optional<std::string> target_section;
  std::optional<std::string> final_target;
  Resolution resolution = Resolution::kArticle;

  bool operator==(const ResolvedPage &) const = default;
};

// Everything known about one snapshot date.
class Snapshot {
 public:
  Snapshot() = default;
  Snapshot(SnapshotDate date, std::vector<ResolvedPage> pages);

  SnapshotDate date() const { return date_; }
  // Sorted by page_id.
  const std::vector<ResolvedPage> &pages() const { return pages_; }

  // Lookup by normalized title. When two pages normalize to the same title
  // the smaller page id wins.
  const ResolvedPage *FindTitle(std::string_view normalized) const;
  const ResolvedPage *FindId(int64_t page_id) const;
  bool Exists(std::string_view normalized) const {
    return FindTitle(normalized) != nullptr;
  }

 private:
  SnapshotDate date_;
  std::vector<ResolvedPage> pages_;
  std::unordered_map<std::string, size_t> by_title_;
};

// Selects revisions, builds the redirect map and resolves chains: the
// ResolvedRedirects view of `date`.
Snapshot ResolveSnapshot(std::span<const RedirectEvent> history,
                         SnapshotDate date);

// Same, for pages whose latest revision before the date is already known.
Snapshot ResolveSelected(std::vector<RedirectEvent> selected,
                         SnapshotDate date);

struct SnapshotLink {
  int64_t page_id = 0;
  std::string page_title;
  int64_t revision_id = 0;
  std::string link;  // normalized
  std::optional<std::string> tosection;
  std::optional<std::string> anchor;
  std::string section_name;
  int section_level = 0;
  int section_number = 0;
  bool is_active = false;

  bool operator==(const SnapshotLink &) const = default;
};

// The snapshot link for `record`, or nothing if its revision is not the
// page's selected revision or its target normalizes to nothing.
std::optional<SnapshotLink> ToSnapshotLink(const RawLinkRecord &record,
                                           const Snapshot &snapshot);

std::vector<SnapshotLink> BuildLinkSnapshot(
    std::span<const RawLinkRecord> records, const Snapshot &snapshot);

extern const std::array<std::string_view, 8> kResolvedRedirectColumns;
extern const std::array<std::string_view, 10> kSnapshotLinkColumns;
extern const std::array<std::string_view, 3> kCycleColumns;

void AppendResolvedPageRow(const ResolvedPage &page, std::string *out);
ResolvedPage ParseResolvedPageRow(const CsvRow &row, const CsvReader &reader);
void AppendSnapshotLinkRow(const SnapshotLink &link, std::string *out);
SnapshotLink ParseSnapshotLinkRow(const CsvRow &row, const CsvReader &reader);

}  // namespace wikilinks

#endif  // WIKILINKS_SNAPSHOT_H_
