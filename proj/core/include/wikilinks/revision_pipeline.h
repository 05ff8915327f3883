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

// Per-revision link extraction (the RawWikilinks dataset) and the
// per-revision redirect history.

#ifndef WIKILINKS_REVISION_PIPELINE_H_
#define WIKILINKS_REVISION_PIPELINE_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wikilinks/csv.h"
#include "wikilinks/dump_reader.h"
#include "wikilinks/timestamp.h"
#include "wikilinks/wikitext.h"

namespace wikilinks {

struct RawLinkRecord {
  int64_t page_id = 0;
  std::string page_title;
  int64_t revision_id = 0;
  std::optional<int64_t> revision_parent_id;
  Timestamp revision_timestamp;
  UserType user_type = UserType::kAnonymous;
  std::string user_username;
  std::optional<int64_t> user_id;
  bool revision_minor = false;
  std::string link;
  std::optional<std::string> tosection;
  std::optional<std::string> anchor;
  std::string section_name;
  int section_level = 0;
  int section_number = 0;

  bool operator==(const RawLinkRecord &) const = default;
};

extern const std::array<std::string_view, 15> kRawLinkColumns;

void AppendRawLinkRow(const RawLinkRecord &record, std::string *out);
RawLinkRecord ParseRawLinkRow(const CsvRow &row, const CsvReader &reader);

// One event per revision: whether that revision is a redirect, and where
// to. Every revision appears, so the history doubles as the revision index.
struct RedirectEvent {
  int64_t page_id = 0;
  std::string page_title;
  int64_t revision_id = 0;
  Timestamp timestamp;
  std::optional<RedirectDecl> redirect;
};

extern const std::array<std::string_view, 7> kRevisionColumns;

void AppendRedirectEventRow(const RedirectEvent &event, std::string *out);
RedirectEvent ParseRedirectEventRow(const CsvRow &row,
                                    const CsvReader &reader);

class RawLinkSink {
 public:
  virtual ~RawLinkSink() = default;
  virtual void Write(const RawLinkRecord &record) = 0;
};

class VectorRawLinkSink : public RawLinkSink {
 public:
  void Write(const RawLinkRecord &record) override {
    records.push_back(record);
  }
  std::vector<RawLinkRecord> records;
};

struct RunSummary {
  int64_t pages = 0;
  int64_t revisions = 0;
  int64_t links = 0;
  int64_t redirect_revisions = 0;
  int64_t errors = 0;
  int64_t warnings = 0;
  int64_t redirect_keyword_without_link = 0;

  RunSummary &operator+=(const RunSummary &o);
  bool operator==(const RunSummary &) const = default;
};

// Extracts every link of every revision of one page. Links go to `sink`
// (if non-null), redirect events to `events` (if non-null).
void ProcessPage(const PageHistory &page, const LanguageProfile &profile,
                 const ExtractOptions &options, RawLinkSink *sink,
                 std::vector<RedirectEvent> *events, RunSummary *summary);

// Runs ProcessPage over a stream of namespace-0 pages.
RunSummary ExtractAll(PageStream *pages, const LanguageProfile &profile,
                      RawLinkSink *sink, const ExtractOptions &options = {});

std::vector<RedirectEvent> ExtractRedirectHistory(
    PageStream *pages, const LanguageProfile &profile);

}  // namespace wikilinks

#endif  // WIKILINKS_REVISION_PIPELINE_H_
