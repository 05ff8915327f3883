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

#ifndef WIKILINKS_INPUT_H_
#define WIKILINKS_INPUT_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace wikilinks {

enum class Codec { kAuto, kPlain, kGzip, kBzip2, kSevenZip };

// "auto", "plain", "gzip", "bzip2", "7z". Throws ConfigError otherwise.
Codec ParseCodec(std::string_view name);
std::string_view CodecName(Codec codec);

// Picks a codec from the file extension (.gz, .bz2, .7z; anything else is
// plain).
Codec DetectCodec(std::string_view path);

// Sequential byte stream.
class ByteSource {
 public:
  virtual ~ByteSource() = default;
  // Returns the number of bytes stored in `buffer`; 0 means end of stream.
  virtual size_t Read(char *buffer, size_t size) = 0;
};

class StringSource : public ByteSource {
 public:
  explicit StringSource(std::string data) : data_(std::move(data)) {}
  size_t Read(char *buffer, size_t size) override;

 private:
  std::string data_;
  size_t pos_ = 0;
};

struct InputOptions {
  Codec codec = Codec::kAuto;
  // Shell command that writes the decoded 7z stream to stdout; "{path}" is
  // replaced by the quoted input path.
  std::string sevenzip_command = "7z e -so {path}";
};

// Opens `path` for decoding. Throws MissingInputError if the file does not
// exist, ConfigError for kAuto-resolution failures, IoError otherwise.
std::unique_ptr<ByteSource> OpenInput(const std::string &path,
                                      const InputOptions &options = {});

}  // namespace wikilinks

#endif  // WIKILINKS_INPUT_H_
