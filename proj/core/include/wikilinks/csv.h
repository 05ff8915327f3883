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

// RFC 4180 CSV with LF line endings.
//
// Absent values are written as empty unquoted fields and present-but-empty
// values as "", so optional columns survive a round trip.

#ifndef WIKILINKS_CSV_H_
#define WIKILINKS_CSV_H_

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wikilinks/input.h"

namespace wikilinks {

using CsvField = std::optional<std::string>;
using CsvRow = std::vector<CsvField>;

void AppendCsvField(std::optional<std::string_view> value, std::string *line);

// Fields joined by ',' and terminated by '\n'.
void AppendCsvRow(std::initializer_list<std::optional<std::string_view>> fields,
                  std::string *out);
void AppendCsvHeader(std::span<const std::string_view> columns,
                     std::string *out);

class CsvReader {
 public:
  // `name` is used in error messages only.
  CsvReader(std::unique_ptr<ByteSource> source, std::string name);

  // Opens a (possibly gzip-compressed) CSV file.
  static CsvReader Open(const std::string &path);

  // Reads the next record. Returns false at end of input; throws CsvError
  // on malformed quoting.
  bool Next(CsvRow *row);

  // Reads the header and checks it against `columns`.
  void ExpectHeader(std::span<const std::string_view> columns);

  // Line on which the last record returned by Next() started (1-based).
  int64_t line() const { return record_line_; }
  const std::string &name() const { return name_; }

  [[noreturn]] void Fail(const std::string &message) const;

  // Typed accessors for the current row; they call Fail() on bad values.
  void RequireColumns(const CsvRow &row, size_t count) const;
  int64_t GetInt(const CsvRow &row, size_t column) const;
  std::optional<int64_t> GetOptionalInt(const CsvRow &row,
                                        size_t column) const;
  bool GetBool(const CsvRow &row, size_t column) const;
  std::string GetString(const CsvRow &row, size_t column) const;

 private:
  bool Fill();

  std::unique_ptr<ByteSource> source_;
  std::string name_;
  std::vector<char> buffer_;
  size_t pos_ = 0;
  size_t size_ = 0;
  bool eof_ = false;
  int64_t line_ = 1;
  int64_t record_line_ = 0;
};

}  // namespace wikilinks

#endif  // WIKILINKS_CSV_H_
