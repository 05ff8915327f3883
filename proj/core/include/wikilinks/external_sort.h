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

#ifndef WIKILINKS_EXTERNAL_SORT_H_
#define WIKILINKS_EXTERNAL_SORT_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

namespace wikilinks {

struct SortKey {
  uint64_t major = 0;
  uint64_t minor = 0;
  auto operator<=>(const SortKey &) const = default;
};

// Sorts (key, payload) records under a memory budget, spilling sorted runs
// to temporary files and merging them on read. Records with equal keys come
// back in insertion order. Not thread-safe.
class ExternalSorter {
 public:
  ExternalSorter(std::filesystem::path temp_dir, size_t memory_budget);
  ~ExternalSorter();

  ExternalSorter(const ExternalSorter &) = delete;
  ExternalSorter &operator=(const ExternalSorter &) = delete;

  void Add(SortKey key, std::string payload);

  class Reader {
   public:
    virtual ~Reader() = default;
    virtual bool Next(SortKey *key, std::string *payload) = 0;
  };

  // Ends input. The sorter must outlive the reader.
  std::unique_ptr<Reader> Finish();

  size_t spilled_runs() const { return runs_.size(); }
  uint64_t record_count() const { return count_; }

 private:
  struct Record {
    SortKey key;
    uint64_t seq;
    std::string payload;
  };
  class MergeReader;

  void Spill();
  void SortBuffer();

  std::filesystem::path temp_dir_;
  size_t memory_budget_;
  size_t buffered_bytes_ = 0;
  uint64_t count_ = 0;
  std::vector<Record> buffer_;
  std::vector<std::filesystem::path> runs_;
  bool finished_ = false;
};

}  // namespace wikilinks

#endif  // WIKILINKS_EXTERNAL_SORT_H_
