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

#include "wikilinks/revision_pipeline.h"

namespace wikilinks {

const std::array<std::string_view, 15> kRawLinkColumns = {
    "page_id",
    "page_title",
    "revision_id",
    "revision_parent_id",
    "revision_timestamp",
    "user_type",
    "user_username",
    "user_id",
    "revision_minor",
    "wikilink.link",
    "wikilink.tosection",
    "wikilink.anchor",
    "wikilink.section_name",
    "wikilink.section_level",
    "wikilink.section_number",
};

const std::array<std::string_view, 7> kRevisionColumns = {
    "page_id",           "page_title",  "revision_id",
    "revision_timestamp", "is_redirect", "redirect.target",
    "redirect.tosection",
};

namespace {

std::optional<std::string_view> OptView(const std::optional<std::string> &s) {
  if (!s) return std::nullopt;
  return std::string_view(*s);
}

std::optional<std::string> OptInt(const std::optional<int64_t> &v) {
  if (!v) return std::nullopt;
  return std::to_string(*v);
}

Timestamp GetTimestamp(const CsvRow &row, size_t column,
                       const CsvReader &reader) {
  auto ts = ParseTimestamp(reader.GetString(row, column));
  if (!ts) reader.Fail("bad timestamp in column " + std::to_string(column + 1));
  return *ts;
}

}  // namespace

void AppendRawLinkRow(const RawLinkRecord &r, std::string *out) {
  const std::string page_id = std::to_string(r.page_id);
  const std::string revision_id = std::to_string(r.revision_id);
  const auto parent_id = OptInt(r.revision_parent_id);
  const std::string timestamp = FormatTimestamp(r.revision_timestamp);
  const auto user_id = OptInt(r.user_id);
  const std::string level = std::to_string(r.section_level);
  const std::string number = std::to_string(r.section_number);
  AppendCsvRow({page_id, r.page_title, revision_id, OptView(parent_id),
                timestamp, UserTypeName(r.user_type), r.user_username,
                OptView(user_id), r.revision_minor ? "1" : "0", r.link,
                OptView(r.tosection), OptView(r.anchor), r.section_name, level,
                number},
               out);
}

RawLinkRecord ParseRawLinkRow(const CsvRow &row, const CsvReader &reader) {
  reader.RequireColumns(row, kRawLinkColumns.size());
  RawLinkRecord r;
  r.page_id = reader.GetInt(row, 0);
  r.page_title = reader.GetString(row, 1);
  r.revision_id = reader.GetInt(row, 2);
  r.revision_parent_id = reader.GetOptionalInt(row, 3);
  r.revision_timestamp = GetTimestamp(row, 4, reader);
  const std::string user_type = reader.GetString(row, 5);
  if (user_type == "registered") {
    r.user_type = UserType::kRegistered;
  } else if (user_type == "anonymous") {
    r.user_type = UserType::kAnonymous;
  } else {
    reader.Fail("bad user_type '" + user_type + "'");
  }
  r.user_username = reader.GetString(row, 6);
  r.user_id = reader.GetOptionalInt(row, 7);
  r.revision_minor = reader.GetBool(row, 8);
  r.link = reader.GetString(row, 9);
  r.tosection = row[10];
  r.anchor = row[11];
  r.section_name = reader.GetString(row, 12);
  r.section_level = static_cast<int>(reader.GetInt(row, 13));
  r.section_number = static_cast<int>(reader.GetInt(row, 14));
  return r;
}

void AppendRedirectEventRow(const RedirectEvent &e, std::string *out) {
  const std::string page_id = std::to_string(e.page_id);
  const std::string revision_id = std::to_string(e.revision_id);
  const std::string timestamp = FormatTimestamp(e.timestamp);
  std::optional<std::string_view> target, tosection;
  if (e.redirect) {
    target = e.redirect->target;
    tosection = OptView(e.redirect->tosection);
  }
  AppendCsvRow({page_id, e.page_title, revision_id, timestamp,
                e.redirect ? "1" : "0", target, tosection},
               out);
}

RedirectEvent ParseRedirectEventRow(const CsvRow &row,
                                    const CsvReader &reader) {
  reader.RequireColumns(row, kRevisionColumns.size());
  RedirectEvent e;
  e.page_id = reader.GetInt(row, 0);
  e.page_title = reader.GetString(row, 1);
  e.revision_id = reader.GetInt(row, 2);
  e.timestamp = GetTimestamp(row, 3, reader);
  if (reader.GetBool(row, 4)) {
    RedirectDecl decl;
    decl.target = reader.GetString(row, 5);
    decl.tosection = row[6];
    e.redirect = std::move(decl);
  }
  return e;
}

RunSummary &RunSummary::operator+=(const RunSummary &o) {
  pages += o.pages;
  revisions += o.revisions;
  links += o.links;
  redirect_revisions += o.redirect_revisions;
  errors += o.errors;
  warnings += o.warnings;
  redirect_keyword_without_link += o.redirect_keyword_without_link;
  return *this;
}

void ProcessPage(const PageHistory &page, const LanguageProfile &profile,
                 const ExtractOptions &options, RawLinkSink *sink,
                 std::vector<RedirectEvent> *events, RunSummary *summary) {
  ++summary->pages;
  RawLinkRecord record;
  record.page_id = page.meta.page_id;
  record.page_title = page.meta.title;
  RedirectDiagnostics diagnostics;
  for (const Revision &rev : page.revisions) {
    ++summary->revisions;
    if (sink != nullptr) {
      record.revision_id = rev.revision_id;
      record.revision_parent_id = rev.parent_id;
      record.revision_timestamp = rev.timestamp;
      record.user_type = rev.user_type;
      record.user_username = rev.user_username;
      record.user_id = rev.user_id;
      record.revision_minor = rev.minor;
      for (ExtractedLink &link : ExtractLinks(rev.wikitext, options)) {
        record.link = std::move(link.link);
        record.tosection = std::move(link.tosection);
        record.anchor = std::move(link.anchor);
        record.section_name = std::move(link.section_name);
        record.section_level = link.section_level;
        record.section_number = link.section_number;
        sink->Write(record);
        ++summary->links;
      }
    }
    auto redirect = DetectRedirect(rev.wikitext, profile, &diagnostics);
    if (redirect) ++summary->redirect_revisions;
    if (events != nullptr) {
      events->push_back(RedirectEvent{page.meta.page_id, page.meta.title,
                                      rev.revision_id, rev.timestamp,
                                      std::move(redirect)});
    }
  }
  summary->redirect_keyword_without_link += diagnostics.keyword_without_link;
}

RunSummary ExtractAll(PageStream *pages, const LanguageProfile &profile,
                      RawLinkSink *sink, const ExtractOptions &options) {
  RunSummary summary;
  while (auto page = pages->Next()) {
    ProcessPage(*page, profile, options, sink, nullptr, &summary);
  }
  return summary;
}

std::vector<RedirectEvent> ExtractRedirectHistory(
    PageStream *pages, const LanguageProfile &profile) {
  std::vector<RedirectEvent> events;
  RunSummary summary;
  while (auto page = pages->Next()) {
    ProcessPage(*page, profile, {}, nullptr, &events, &summary);
  }
  return events;
}

}  // namespace wikilinks
