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

#ifndef WIKILINKS_OUTPUT_H_
#define WIKILINKS_OUTPUT_H_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace wikilinks {

// Hex SHA-256 of a byte string or of a file's contents.
std::string Sha256Hex(std::string_view data);
std::string Sha256File(const std::filesystem::path &path);

// Sidecar "<file>.sha256" in sha256sum format: "<hex>  <basename>\n".
std::filesystem::path ChecksumPath(const std::filesystem::path &path);
std::filesystem::path PartialMarkerPath(const std::filesystem::path &path);

struct ChecksumCheck {
  std::filesystem::path file;
  bool ok = false;
  std::string message;
};

// Recomputes every sidecar found directly inside `dir`, sorted by name.
std::vector<ChecksumCheck> VerifyChecksums(const std::filesystem::path &dir);

// An output file that only appears under its final name once Commit()
// succeeds. Writes go to "<path>.tmp"; a file destroyed without Commit()
// leaves a "<path>.partial" marker instead. Gzip output carries no mtime or
// name, so identical content yields identical bytes.
class OutputFile {
 public:
  enum class Compression { kNone, kGzip };

  OutputFile(std::filesystem::path path, Compression compression);
  // Picks kGzip for paths ending in ".gz".
  explicit OutputFile(std::filesystem::path path);
  ~OutputFile();

  OutputFile(const OutputFile &) = delete;
  OutputFile &operator=(const OutputFile &) = delete;

  void Write(std::string_view data);

  // Flushes, renames into place and writes the checksum sidecar. Returns
  // the hex digest of the final file.
  std::string Commit();

  const std::filesystem::path &path() const { return path_; }

 private:
  struct Stream;

  void Abandon(const std::string &reason);

  std::filesystem::path path_;
  std::filesystem::path tmp_path_;
  std::unique_ptr<Stream> stream_;
  bool committed_ = false;
};

}  // namespace wikilinks

#endif  // WIKILINKS_OUTPUT_H_
