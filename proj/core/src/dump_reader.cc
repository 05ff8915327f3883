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

#include "wikilinks/dump_reader.h"

#include <expat.h>

#include <algorithm>
#include <charconv>
#include <cstring>

#include "wikilinks/error.h"

namespace wikilinks {

namespace {

constexpr size_t kChunkSize = 1 << 20;

bool ParseInt(std::string_view text, int64_t *out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\n')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\n')) {
    text.remove_suffix(1);
  }
  if (text.empty()) return false;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && end == text.data() + text.size();
}

std::string_view Trim(std::string_view s) {
  auto space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

bool HasAttribute(const XML_Char **attrs, const char *name) {
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    if (std::strcmp(attrs[i], name) == 0) return true;
  }
  return false;
}

}  // namespace

std::string_view UserTypeName(UserType type) {
  return type == UserType::kRegistered ? "registered" : "anonymous";
}

void SortRevisions(std::vector<Revision> *revisions) {
  std::stable_sort(revisions->begin(), revisions->end(),
                   [](const Revision &a, const Revision &b) {
                     if (a.timestamp != b.timestamp) {
                       return a.timestamp < b.timestamp;
                     }
                     return a.revision_id < b.revision_id;
                   });
}

// Expat callbacks build one page at a time. Only leaf elements of interest
// capture character data.
struct DumpReader::Parser {
  enum class Field {
    kNone,
    kTitle,
    kNs,
    kPageId,
    kRevisionId,
    kParentId,
    kTimestamp,
    kUsername,
    kIp,
    kUserId,
    kText,
  };

  struct RawRevision {
    std::string id, parent_id, timestamp, username, ip, user_id, text;
    bool has_text = false;
    bool text_deleted = false;
    bool minor = false;
  };

  explicit Parser(DumpReader *owner) : reader(owner) {
    parser = XML_ParserCreate("UTF-8");
    XML_SetUserData(parser, this);
    XML_SetElementHandler(parser, &Parser::OnStart, &Parser::OnEnd);
    XML_SetCharacterDataHandler(parser, &Parser::OnText);
  }
  ~Parser() { XML_ParserFree(parser); }

  static void OnStart(void *data, const XML_Char *name,
                      const XML_Char **attrs) {
    static_cast<Parser *>(data)->Start(name, attrs);
  }
  static void OnEnd(void *data, const XML_Char *name) {
    static_cast<Parser *>(data)->End(name);
  }
  static void OnText(void *data, const XML_Char *text, int len) {
    auto *p = static_cast<Parser *>(data);
    if (p->capture != nullptr) p->capture->append(text, len);
  }

  void Start(const char *name, const XML_Char **attrs) {
    ++depth;
    capture = nullptr;
    if (!in_page) {
      if (std::strcmp(name, "page") == 0) {
        in_page = true;
        page_depth = depth;
        page_offset = XML_GetCurrentByteIndex(parser);
        title.clear();
        ns.clear();
        page_id.clear();
        revisions.clear();
        page_error.clear();
        warnings.clear();
      }
      return;
    }
    if (in_revision) {
      if (in_contributor) {
        if (std::strcmp(name, "username") == 0) {
          Capture(Field::kUsername, &revision.username);
        } else if (std::strcmp(name, "ip") == 0) {
          Capture(Field::kIp, &revision.ip);
        } else if (std::strcmp(name, "id") == 0) {
          Capture(Field::kUserId, &revision.user_id);
        }
        return;
      }
      if (depth != revision_depth + 1) return;
      if (std::strcmp(name, "id") == 0) {
        Capture(Field::kRevisionId, &revision.id);
      } else if (std::strcmp(name, "parentid") == 0) {
        Capture(Field::kParentId, &revision.parent_id);
      } else if (std::strcmp(name, "timestamp") == 0) {
        Capture(Field::kTimestamp, &revision.timestamp);
      } else if (std::strcmp(name, "contributor") == 0) {
        in_contributor = true;
      } else if (std::strcmp(name, "minor") == 0) {
        revision.minor = true;
      } else if (std::strcmp(name, "text") == 0) {
        revision.has_text = true;
        revision.text_deleted = HasAttribute(attrs, "deleted");
        Capture(Field::kText, &revision.text);
      }
      return;
    }
    if (depth != page_depth + 1) return;
    if (std::strcmp(name, "title") == 0) {
      Capture(Field::kTitle, &title);
    } else if (std::strcmp(name, "ns") == 0) {
      Capture(Field::kNs, &ns);
    } else if (std::strcmp(name, "id") == 0) {
      Capture(Field::kPageId, &page_id);
    } else if (std::strcmp(name, "revision") == 0) {
      in_revision = true;
      revision_depth = depth;
      revision = RawRevision{};
    }
  }

  void Capture(Field f, std::string *target) {
    field = f;
    capture = target;
    capture->clear();
  }

  void End(const char *name) {
    capture = nullptr;
    field = Field::kNone;
    if (in_contributor && std::strcmp(name, "contributor") == 0) {
      in_contributor = false;
    } else if (in_revision && depth == revision_depth) {
      in_revision = false;
      FinishRevision();
    } else if (in_page && depth == page_depth) {
      in_page = false;
      FinishPage();
    }
    --depth;
  }

  void FinishRevision() {
    if (!page_error.empty()) return;
    Revision rev;
    int64_t id;
    if (!ParseInt(revision.id, &id) || id < 1) {
      page_error = "revision without a valid id";
      return;
    }
    rev.revision_id = id;
    auto ts = ParseTimestamp(Trim(revision.timestamp));
    if (!ts) {
      page_error = "revision " + std::to_string(id) +
                   " has a missing or malformed timestamp";
      return;
    }
    rev.timestamp = *ts;
    int64_t parent;
    if (!Trim(revision.parent_id).empty()) {
      if (!ParseInt(revision.parent_id, &parent)) {
        page_error = "revision " + std::to_string(id) + " has a bad parentid";
        return;
      }
      rev.parent_id = parent;
    }
    int64_t user_id;
    if (!revision.user_id.empty() && ParseInt(revision.user_id, &user_id) &&
        revision.ip.empty()) {
      rev.user_type = UserType::kRegistered;
      rev.user_id = user_id;
      rev.user_username = revision.username;
    } else {
      rev.user_type = UserType::kAnonymous;
      rev.user_username = revision.ip.empty() ? revision.username : revision.ip;
    }
    rev.minor = revision.minor;
    if (!revision.has_text || revision.text_deleted) {
      warnings.push_back("revision " + std::to_string(id) +
                         (revision.has_text ? " has deleted text"
                                            : " has no text element"));
    } else {
      rev.wikitext = std::move(revision.text);
    }
    revisions.push_back(std::move(rev));
  }

  void FinishPage() {
    const int64_t index = reader->pages_seen_++;
    PageHistory page;
    page.meta.title = std::string(Trim(title));
    int64_t id = 0;
    int64_t ns_value = 0;
    if (page_error.empty()) {
      if (page.meta.title.empty()) {
        page_error = "page without a title";
      } else if (!ParseInt(page_id, &id) || id < 1) {
        page_error = "page without a valid id";
      } else if (!Trim(ns).empty() && !ParseInt(ns, &ns_value)) {
        page_error = "page with a malformed ns";
      }
    }
    if (!page_error.empty()) {
      reader->Report({DumpIssue::Severity::kError, index, page_offset,
                      page.meta.title, page_error});
      return;
    }
    for (std::string &w : warnings) {
      reader->Report({DumpIssue::Severity::kWarning, index, page_offset,
                      page.meta.title, std::move(w)});
    }
    page.meta.page_id = id;
    page.meta.ns = static_cast<int>(ns_value);
    page.revisions = std::move(revisions);
    revisions.clear();
    SortRevisions(&page.revisions);
    reader->ready_.push_back(std::move(page));
  }

  DumpReader *reader;
  XML_Parser parser;
  int depth = 0;
  bool in_page = false;
  bool in_revision = false;
  bool in_contributor = false;
  int page_depth = 0;
  int revision_depth = 0;
  int64_t page_offset = 0;
  Field field = Field::kNone;
  std::string *capture = nullptr;

  std::string title, ns, page_id, page_error;
  std::vector<std::string> warnings;
  RawRevision revision;
  std::vector<Revision> revisions;
};

DumpReader::DumpReader(std::unique_ptr<ByteSource> source)
    : source_(std::move(source)),
      parser_(std::make_unique<Parser>(this)),
      buffer_(kChunkSize) {}

DumpReader::~DumpReader() = default;

void DumpReader::Report(DumpIssue issue) {
  if (issue.severity == DumpIssue::Severity::kError) {
    ++error_count_;
  } else {
    ++warning_count_;
  }
  if (issues_.size() < kMaxStoredIssues) issues_.push_back(std::move(issue));
}

std::optional<PageHistory> DumpReader::Next() {
  while (ready_.empty() && !finished_) {
    size_t n = source_->Read(buffer_.data(), buffer_.size());
    const bool last = n == 0;
    if (XML_Parse(parser_->parser, buffer_.data(), static_cast<int>(n),
                  last) == XML_STATUS_ERROR) {
      throw XmlError(XML_ErrorString(XML_GetErrorCode(parser_->parser)),
                     XML_GetCurrentByteIndex(parser_->parser));
    }
    finished_ = last;
  }
  if (ready_.empty()) return std::nullopt;
  PageHistory page = std::move(ready_.front());
  ready_.pop_front();
  return page;
}

std::unique_ptr<DumpReader> OpenDump(const std::string &path,
                                     const InputOptions &options) {
  return std::make_unique<DumpReader>(OpenInput(path, options));
}

std::optional<PageHistory> NamespaceFilter::Next() {
  while (auto page = upstream_->Next()) {
    if (page->meta.ns == ns_) return page;
  }
  return std::nullopt;
}

std::optional<PageHistory> VectorPageStream::Next() {
  if (next_ >= pages_.size()) return std::nullopt;
  return std::move(pages_[next_++]);
}

}  // namespace wikilinks
