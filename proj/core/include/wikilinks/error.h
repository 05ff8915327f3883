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

#ifndef WIKILINKS_ERROR_H_
#define WIKILINKS_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wikilinks {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user configuration: unknown codec, unsorted dates, bad flag values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A required input file is absent.
class MissingInputError : public Error {
 public:
  explicit MissingInputError(const std::string &path)
      : Error("missing input: " + path), path_(path) {}
  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

// Malformed XML. The offset counts bytes of the decoded (decompressed) stream.
class XmlError : public Error {
 public:
  XmlError(const std::string &message, int64_t byte_offset)
      : Error("malformed XML at byte " + std::to_string(byte_offset) + ": " +
              message),
        byte_offset_(byte_offset) {}
  int64_t byte_offset() const { return byte_offset_; }

 private:
  int64_t byte_offset_;
};

// Malformed row in one of the intermediate CSV datasets.
class CsvError : public Error {
 public:
  CsvError(const std::string &file, int64_t line, const std::string &message)
      : Error(file + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  int64_t line() const { return line_; }

 private:
  int64_t line_;
};

// Failure to read or write a file.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wikilinks

#endif  // WIKILINKS_ERROR_H_
