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

// Streaming reader for MediaWiki "pages-meta-history" XML exports
// (export schema 0.8 to 0.11).

#ifndef WIKILINKS_DUMP_READER_H_
#define WIKILINKS_DUMP_READER_H_

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wikilinks/input.h"
#include "wikilinks/timestamp.h"

namespace wikilinks {

struct PageMeta {
  int64_t page_id = 0;
  std::string title;
  int ns = 0;
};

enum class UserType { kRegistered, kAnonymous };

std::string_view UserTypeName(UserType type);

struct Revision {
  int64_t revision_id = 0;
  std::optional<int64_t> parent_id;
  Timestamp timestamp;
  UserType user_type = UserType::kAnonymous;
  std::string user_username;
  std::optional<int64_t> user_id;  // present iff registered
  bool minor = false;
  std::string wikitext;
};

// Revisions are ordered by (timestamp, revision_id); parent ids play no
// part in ordering since early histories are not linear.
struct PageHistory {
  PageMeta meta;
  std::vector<Revision> revisions;
};

void SortRevisions(std::vector<Revision> *revisions);

struct DumpIssue {
  enum class Severity { kError, kWarning };
  Severity severity = Severity::kError;
  int64_t page_index = 0;   // 0-based index of the <page> element
  int64_t byte_offset = 0;  // start of the <page> element
  std::string page_title;
  std::string message;
};

class PageStream {
 public:
  virtual ~PageStream() = default;
  virtual std::optional<PageHistory> Next() = 0;
};

class DumpReader : public PageStream {
 public:
  explicit DumpReader(std::unique_ptr<ByteSource> source);
  ~DumpReader() override;

  DumpReader(const DumpReader &) = delete;
  DumpReader &operator=(const DumpReader &) = delete;

  // Throws XmlError on malformed XML; pages lacking a title, id or
  // revision timestamp are skipped and reported in issues().
  std::optional<PageHistory> Next() override;

  // Number of <page> elements fully parsed so far, skipped ones included.
  int64_t pages_seen() const { return pages_seen_; }
  int64_t error_count() const { return error_count_; }
  int64_t warning_count() const { return warning_count_; }
  // The first kMaxStoredIssues issues; the counters above are exact.
  const std::vector<DumpIssue> &issues() const { return issues_; }

  static constexpr size_t kMaxStoredIssues = 1000;

 private:
  struct Parser;
  friend struct Parser;

  void Report(DumpIssue issue);

  std::unique_ptr<ByteSource> source_;
  std::unique_ptr<Parser> parser_;
  std::deque<PageHistory> ready_;
  std::vector<char> buffer_;
  bool finished_ = false;
  int64_t pages_seen_ = 0;
  int64_t error_count_ = 0;
  int64_t warning_count_ = 0;
  std::vector<DumpIssue> issues_;
};

// Opens a dump file with the requested codec.
std::unique_ptr<DumpReader> OpenDump(const std::string &path,
                                     const InputOptions &options = {});

// Passes through only the pages in one namespace.
class NamespaceFilter : public PageStream {
 public:
  NamespaceFilter(PageStream *upstream, int ns)
      : upstream_(upstream), ns_(ns) {}
  std::optional<PageHistory> Next() override;

 private:
  PageStream *upstream_;
  int ns_;
};

class VectorPageStream : public PageStream {
 public:
  explicit VectorPageStream(std::vector<PageHistory> pages)
      : pages_(std::move(pages)) {}
  std::optional<PageHistory> Next() override;

 private:
  std::vector<PageHistory> pages_;
  size_t next_ = 0;
};

}  // namespace wikilinks

#endif  // WIKILINKS_DUMP_READER_H_
