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

#include "wikilinks/snapshot.h"

#include <algorithm>

#include "wikilinks/wikitext.h"

namespace wikilinks {

const std::array<std::string_view, 8> kResolvedRedirectColumns = {
    "page_id",      "page_title", "is_redirect",    "immediate_target",
    "final_target", "resolution", "target_section", "revision_id",
};

const std::array<std::string_view, 10> kSnapshotLinkColumns = {
    "page_id",
    "page_title",
    "revision_id",
    "wikilink.link",
    "wikilink.tosection",
    "wikilink.anchor",
    "wikilink.section_name",
    "wikilink.section_level",
    "wikilink.section_number",
    "wikilink.is_active",
};

const std::array<std::string_view, 3> kCycleColumns = {
    "page_id", "page_title", "immediate_target"};

namespace {

std::string TitleKey(const std::string &title) {
  return NormalizeTitle(title).value_or(title);
}

std::optional<std::string_view> OptView(const std::optional<std::string> &s) {
  if (!s) return std::nullopt;
  return std::string_view(*s);
}

}  // namespace

std::vector<SnapshotDate> DefaultSnapshotDates() {
  std::vector<SnapshotDate> dates;
  for (int year = 2001; year <= 2018; ++year) {
    dates.push_back(SnapshotDate{MakeDate(year, 3, 1)});
  }
  return dates;
}

std::optional<size_t> LatestBefore(std::span<const RedirectEvent> revisions,
                                   SnapshotDate date) {
  std::optional<size_t> best;
  for (size_t i = 0; i < revisions.size(); ++i) {
    const RedirectEvent &e = revisions[i];
    if (!date.Contains(e.timestamp)) continue;
    if (!best) {
      best = i;
      continue;
    }
    const RedirectEvent &b = revisions[*best];
    if (e.timestamp > b.timestamp ||
        (e.timestamp == b.timestamp && e.revision_id > b.revision_id)) {
      best = i;
    }
  }
  return best;
}

std::map<int64_t, int64_t> SelectSnapshotRevisions(
    std::span<const RedirectEvent> index, SnapshotDate date) {
  std::map<int64_t, std::pair<Timestamp, int64_t>> best;
  for (const RedirectEvent &e : index) {
    if (!date.Contains(e.timestamp)) continue;
    auto candidate = std::make_pair(e.timestamp, e.revision_id);
    auto [it, inserted] = best.emplace(e.page_id, candidate);
    if (!inserted && candidate > it->second) it->second = candidate;
  }
  std::map<int64_t, int64_t> selected;
  for (const auto &[page_id, choice] : best) {
    selected.emplace(page_id, choice.second);
  }
  return selected;
}

RedirectMap BuildRedirectMap(std::span<const RedirectEvent> history,
                             const std::map<int64_t, int64_t> &selected,
                             SnapshotDate date) {
  std::vector<const RedirectEvent *> chosen;
  for (const RedirectEvent &e : history) {
    if (!e.redirect || !date.Contains(e.timestamp)) continue;
    auto it = selected.find(e.page_id);
    if (it != selected.end() && it->second == e.revision_id) {
      chosen.push_back(&e);
    }
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const RedirectEvent *a, const RedirectEvent *b) {
              return a->page_id < b->page_id;
            });
  RedirectMap map;
  for (const RedirectEvent *e : chosen) {
    map.emplace(TitleKey(e->page_title),
                RedirectTarget{NormalizeTitle(e->redirect->target),
                               e->redirect->tosection});
  }
  return map;
}

std::string_view ResolutionName(Resolution resolution) {
  switch (resolution) {
    case Resolution::kArticle:
      return "article";
    case Resolution::kResolved:
      return "resolved";
    case Resolution::kDanglingTarget:
      return "dangling-target";
    case Resolution::kCycle:
      return "cycle";
  }
  return "?";
}

std::optional<Resolution> ParseResolution(std::string_view name) {
  for (Resolution r : {Resolution::kArticle, Resolution::kResolved,
                       Resolution::kDanglingTarget, Resolution::kCycle}) {
    if (ResolutionName(r) == name) return r;
  }
  return std::nullopt;
}

std::unordered_map<std::string, ChainEnd> ResolveChains(
    const RedirectMap &redirects,
    const std::unordered_set<std::string> &existing) {
  std::unordered_map<std::string, ChainEnd> ends;
  std::unordered_set<std::string_view> visited;
  for (const auto &[title, target] : redirects) {
    ChainEnd end;
    if (!target.title) {
      end.resolution = Resolution::kDanglingTarget;
      ends.emplace(title, std::move(end));
      continue;
    }
    visited.clear();
    visited.insert(title);
    const std::string *current = &*target.title;
    int hops = 1;
    while (true) {
      if (!existing.contains(*current)) {
        end.resolution = Resolution::kDanglingTarget;
        break;
      }
      auto next = redirects.find(*current);
      if (next == redirects.end()) {
        end.resolution = Resolution::kResolved;
        end.final_target = *current;
        break;
      }
      if (visited.contains(*current) || hops >= kMaxRedirectDepth) {
        end.resolution = Resolution::kCycle;
        end.final_target = *target.title;
        break;
      }
      visited.insert(*current);
      if (!next->second.title) {
        end.resolution = Resolution::kDanglingTarget;
        break;
      }
      current = &*next->second.title;
      ++hops;
    }
    ends.emplace(title, std::move(end));
  }
  return ends;
}

Snapshot::Snapshot(SnapshotDate date, std::vector<ResolvedPage> pages)
    : date_(date), pages_(std::move(pages)) {
  std::sort(pages_.begin(), pages_.end(),
            [](const ResolvedPage &a, const ResolvedPage &b) {
              return a.page_id < b.page_id;
            });
  by_title_.reserve(pages_.size());
  for (size_t i = 0; i < pages_.size(); ++i) {
    by_title_.emplace(TitleKey(pages_[i].title), i);
  }
}

const ResolvedPage *Snapshot::FindTitle(std::string_view normalized) const {
  auto it = by_title_.find(std::string(normalized));
  return it == by_title_.end() ? nullptr : &pages_[it->second];
}

const ResolvedPage *Snapshot::FindId(int64_t page_id) const {
  auto it = std::lower_bound(
      pages_.begin(), pages_.end(), page_id,
      [](const ResolvedPage &p, int64_t id) { return p.page_id < id; });
  if (it == pages_.end() || it->page_id != page_id) return nullptr;
  return &*it;
}

Snapshot ResolveSelected(std::vector<RedirectEvent> selected,
                         SnapshotDate date) {
  std::sort(selected.begin(), selected.end(),
            [](const RedirectEvent &a, const RedirectEvent &b) {
              return a.page_id < b.page_id;
            });
  std::unordered_set<std::string> existing;
  RedirectMap redirects;
  for (const RedirectEvent &e : selected) {
    std::string key = TitleKey(e.page_title);
    if (e.redirect) {
      redirects.emplace(key, RedirectTarget{NormalizeTitle(e.redirect->target),
                                            e.redirect->tosection});
    }
    existing.insert(std::move(key));
  }
  const auto ends = ResolveChains(redirects, existing);

  std::vector<ResolvedPage> pages;
  pages.reserve(selected.size());
  for (RedirectEvent &e : selected) {
    ResolvedPage page;
    page.page_id = e.page_id;
    page.title = std::move(e.page_title);
    page.revision_id = e.revision_id;
    page.is_redirect = e.redirect.has_value();
    if (page.is_redirect) {
      page.immediate_target = NormalizeTitle(e.redirect->target);
      page.target_section = e.redirect->tosection;
      const ChainEnd &end = ends.at(TitleKey(page.title));
      page.resolution = end.resolution;
      page.final_target = end.final_target;
    }
    pages.push_back(std::move(page));
  }
  return Snapshot(date, std::move(pages));
}

Snapshot ResolveSnapshot(std::span<const RedirectEvent> history,
                         SnapshotDate date) {
  const auto selected = SelectSnapshotRevisions(history, date);
  std::vector<RedirectEvent> chosen;
  for (const RedirectEvent &e : history) {
    auto it = selected.find(e.page_id);
    if (it != selected.end() && it->second == e.revision_id &&
        date.Contains(e.timestamp)) {
      chosen.push_back(e);
    }
  }
  return ResolveSelected(std::move(chosen), date);
}

std::optional<SnapshotLink> ToSnapshotLink(const RawLinkRecord &record,
                                           const Snapshot &snapshot) {
  const ResolvedPage *page = snapshot.FindId(record.page_id);
  if (page == nullptr || page->revision_id != record.revision_id) {
    return std::nullopt;
  }
  auto target = NormalizeTitle(record.link);
  if (!target) return std::nullopt;
  SnapshotLink link;
  link.page_id = record.page_id;
  link.page_title = record.page_title;
  link.revision_id = record.revision_id;
  link.is_active = snapshot.Exists(*target);
  link.link = std::move(*target);
  link.tosection = record.tosection;
  link.anchor = record.anchor;
  link.section_name = record.section_name;
  link.section_level = record.section_level;
  link.section_number = record.section_number;
  return link;
}

std::vector<SnapshotLink> BuildLinkSnapshot(
    std::span<const RawLinkRecord> records, const Snapshot &snapshot) {
  std::vector<SnapshotLink> links;
  for (const RawLinkRecord &r : records) {
    if (auto link = ToSnapshotLink(r, snapshot)) {
      links.push_back(std::move(*link));
    }
  }
  return links;
}

void AppendResolvedPageRow(const ResolvedPage &p, std::string *out) {
  const std::string page_id = std::to_string(p.page_id);
  const std::string revision_id = std::to_string(p.revision_id);
  std::optional<std::string_view> resolution;
  if (p.is_redirect) resolution = ResolutionName(p.resolution);
  else resolution = ResolutionName(Resolution::kArticle);
  AppendCsvRow({page_id, p.title, p.is_redirect ? "1" : "0",
                OptView(p.immediate_target), OptView(p.final_target),
                resolution, OptView(p.target_section), revision_id},
               out);
}

ResolvedPage ParseResolvedPageRow(const CsvRow &row, const CsvReader &reader) {
  reader.RequireColumns(row, kResolvedRedirectColumns.size());
  ResolvedPage p;
  p.page_id = reader.GetInt(row, 0);
  p.title = reader.GetString(row, 1);
  p.is_redirect = reader.GetBool(row, 2);
  p.immediate_target = row[3];
  p.final_target = row[4];
  auto resolution = ParseResolution(reader.GetString(row, 5));
  if (!resolution) reader.Fail("bad resolution '" + reader.GetString(row, 5) + "'");
  p.resolution = *resolution;
  p.target_section = row[6];
  p.revision_id = reader.GetInt(row, 7);
  if (!p.is_redirect && p.resolution != Resolution::kArticle) {
    reader.Fail("non-redirect page with resolution " +
                std::string(ResolutionName(p.resolution)));
  }
  return p;
}

void AppendSnapshotLinkRow(const SnapshotLink &l, std::string *out) {
  const std::string page_id = std::to_string(l.page_id);
  const std::string revision_id = std::to_string(l.revision_id);
  const std::string level = std::to_string(l.section_level);
  const std::string number = std::to_string(l.section_number);
  AppendCsvRow({page_id, l.page_title, revision_id, l.link,
                OptView(l.tosection), OptView(l.anchor), l.section_name, level,
                number, l.is_active ? "1" : "0"},
               out);
}

SnapshotLink ParseSnapshotLinkRow(const CsvRow &row, const CsvReader &reader) {
  reader.RequireColumns(row, kSnapshotLinkColumns.size());
  SnapshotLink l;
  l.page_id = reader.GetInt(row, 0);
  l.page_title = reader.GetString(row, 1);
  l.revision_id = reader.GetInt(row, 2);
  l.link = reader.GetString(row, 3);
  l.tosection = row[4];
  l.anchor = row[5];
  l.section_name = reader.GetString(row, 6);
  l.section_level = static_cast<int>(reader.GetInt(row, 7));
  l.section_number = static_cast<int>(reader.GetInt(row, 8));
  l.is_active = reader.GetBool(row, 9);
  return l;
}

}  // namespace wikilinks
