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

#include "wikilinks/external_sort.h"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <queue>

#include "wikilinks/error.h"

namespace wikilinks {

namespace fs = std::filesystem;

namespace {

constexpr size_t kRecordOverhead = 64;

std::atomic<uint64_t> next_sorter_id{0};

void WriteU64(std::ofstream &out, uint64_t v) {
  out.write(reinterpret_cast<const char *>(&v), sizeof(v));
}

bool ReadU64(std::ifstream &in, uint64_t *v) {
  in.read(reinterpret_cast<char *>(v), sizeof(*v));
  return in.gcount() == sizeof(*v);
}

}  // namespace

ExternalSorter::ExternalSorter(fs::path temp_dir, size_t memory_budget)
    : temp_dir_(std::move(temp_dir)),
      memory_budget_(std::max<size_t>(memory_budget, 1)) {}

ExternalSorter::~ExternalSorter() {
  std::error_code ec;
  for (const auto &run : runs_) fs::remove(run, ec);
}

void ExternalSorter::Add(SortKey key, std::string payload) {
  buffered_bytes_ += payload.size() + kRecordOverhead;
  buffer_.push_back(Record{key, count_++, std::move(payload)});
  if (buffered_bytes_ >= memory_budget_) Spill();
}

void ExternalSorter::SortBuffer() {
  std::sort(buffer_.begin(), buffer_.end(),
            [](const Record &a, const Record &b) {
              if (a.key != b.key) return a.key < b.key;
              return a.seq < b.seq;
            });
}

void ExternalSorter::Spill() {
  if (buffer_.empty()) return;
  SortBuffer();
  fs::create_directories(temp_dir_);
  fs::path path = temp_dir_ / ("sort-" + std::to_string(::getpid()) + "-" +
                               std::to_string(next_sorter_id++) + ".run");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create sort run " + path.string());
  runs_.push_back(path);
  for (const Record &r : buffer_) {
    WriteU64(out, r.key.major);
    WriteU64(out, r.key.minor);
    WriteU64(out, r.seq);
    WriteU64(out, r.payload.size());
    out.write(r.payload.data(), static_cast<std::streamsize>(r.payload.size()));
  }
  out.close();
  if (!out) throw IoError("write failed on sort run " + path.string());
  buffer_.clear();
  buffered_bytes_ = 0;
}

class ExternalSorter::MergeReader : public ExternalSorter::Reader {
 public:
  explicit MergeReader(ExternalSorter *sorter) : sorter_(sorter) {
    for (const fs::path &run : sorter_->runs_) {
      auto in = std::make_unique<std::ifstream>(run, std::ios::binary);
      if (!*in) throw IoError("cannot reopen sort run " + run.string());
      files_.push_back(std::move(in));
    }
    heads_.resize(files_.size() + 1);
    for (size_t i = 0; i <= files_.size(); ++i) Advance(i);
  }

  bool Next(SortKey *key, std::string *payload) override {
    if (heap_.empty()) return false;
    size_t source = heap_.top().source;
    heap_.pop();
    *key = heads_[source].key;
    *payload = std::move(heads_[source].payload);
    Advance(source);
    return true;
  }

 private:
  struct Entry {
    SortKey key;
    uint64_t seq;
    size_t source;
    bool operator>(const Entry &o) const {
      if (key != o.key) return key > o.key;
      return seq > o.seq;
    }
  };

  // Sources [0, files) are spilled runs; source == files is the in-memory
  // tail.
  void Advance(size_t source) {
    Record &head = heads_[source];
    if (source == files_.size()) {
      if (memory_pos_ >= sorter_->buffer_.size()) return;
      head = std::move(sorter_->buffer_[memory_pos_++]);
    } else {
      std::ifstream &in = *files_[source];
      uint64_t size;
      if (!ReadU64(in, &head.key.major)) return;
      if (!ReadU64(in, &head.key.minor) || !ReadU64(in, &head.seq) ||
          !ReadU64(in, &size)) {
        throw IoError("truncated sort run");
      }
      head.payload.resize(size);
      in.read(head.payload.data(), static_cast<std::streamsize>(size));
      if (static_cast<uint64_t>(in.gcount()) != size) {
        throw IoError("truncated sort run");
      }
    }
    heap_.push(Entry{head.key, head.seq, source});
  }

  ExternalSorter *sorter_;
  std::vector<std::unique_ptr<std::ifstream>> files_;
  std::vector<Record> heads_;
  size_t memory_pos_ = 0;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
};

std::unique_ptr<ExternalSorter::Reader> ExternalSorter::Finish() {
  if (finished_) throw Error("ExternalSorter::Finish called twice");
  finished_ = true;
  SortBuffer();
  return std::make_unique<MergeReader>(this);
}

}  // namespace wikilinks
