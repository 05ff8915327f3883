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

#include "wikilinks/csv.h"

#include <charconv>

#include "wikilinks/error.h"

namespace wikilinks {

void AppendCsvField(std::optional<std::string_view> value, std::string *line) {
  if (!value) return;
  bool quote = value->empty() ||
               value->find_first_of(",\"\r\n") != std::string_view::npos;
  if (!quote) {
    line->append(*value);
    return;
  }
  line->push_back('"');
  for (char c : *value) {
    if (c == '"') line->push_back('"');
    line->push_back(c);
  }
  line->push_back('"');
}

void AppendCsvRow(std::initializer_list<std::optional<std::string_view>> fields,
                  std::string *out) {
  bool first = true;
  for (const auto &f : fields) {
    if (!first) out->push_back(',');
    first = false;
    AppendCsvField(f, out);
  }
  out->push_back('\n');
}

void AppendCsvHeader(std::span<const std::string_view> columns,
                     std::string *out) {
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out->push_back(',');
    AppendCsvField(columns[i], out);
  }
  out->push_back('\n');
}

CsvReader::CsvReader(std::unique_ptr<ByteSource> source, std::string name)
    : source_(std::move(source)), name_(std::move(name)), buffer_(1 << 16) {}

CsvReader CsvReader::Open(const std::string &path) {
  InputOptions options;
  options.codec = DetectCodec(path);
  return CsvReader(OpenInput(path, options), path);
}

bool CsvReader::Fill() {
  if (pos_ < size_) return true;
  if (eof_) return false;
  size_ = source_->Read(buffer_.data(), buffer_.size());
  pos_ = 0;
  if (size_ == 0) eof_ = true;
  return size_ > 0;
}

void CsvReader::Fail(const std::string &message) const {
  throw CsvError(name_, record_line_, message);
}

bool CsvReader::Next(CsvRow *row) {
  row->clear();
  if (!Fill()) return false;
  record_line_ = line_;

  std::string field;
  bool quoted = false;
  bool in_quotes = false;
  bool after_quote = false;
  auto finish_field = [&] {
    if (quoted || !field.empty()) {
      row->emplace_back(std::move(field));
    } else {
      row->emplace_back(std::nullopt);
    }
    field.clear();
    quoted = false;
    after_quote = false;
  };

  while (Fill()) {
    char c = buffer_[pos_++];
    if (in_quotes) {
      if (c == '"') {
        if (!Fill()) {
          in_quotes = false;
          after_quote = true;
          break;
        }
        if (buffer_[pos_] == '"') {
          field.push_back('"');
          ++pos_;
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(c);
      }
      continue;
    }
    if (c == ',') {
      finish_field();
    } else if (c == '\n') {
      ++line_;
      finish_field();
      return true;
    } else if (c == '\r') {
      if (Fill() && buffer_[pos_] == '\n') continue;
      Fail("stray carriage return");
    } else if (after_quote) {
      Fail("unexpected character after closing quote");
    } else if (c == '"') {
      if (!field.empty()) Fail("quote inside unquoted field");
      quoted = true;
      in_quotes = true;
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) Fail("unterminated quoted field");
  finish_field();
  return true;
}

void CsvReader::ExpectHeader(std::span<const std::string_view> columns) {
  CsvRow row;
  if (!Next(&row)) {
    record_line_ = 1;
    Fail("missing header row");
  }
  bool ok = row.size() == columns.size();
  for (size_t i = 0; ok && i < columns.size(); ++i) {
    ok = row[i].has_value() && *row[i] == columns[i];
  }
  if (!ok) Fail("unexpected header row");
}

void CsvReader::RequireColumns(const CsvRow &row, size_t count) const {
  if (row.size() != count) {
    Fail("expected " + std::to_string(count) + " fields, found " +
         std::to_string(row.size()));
  }
}

int64_t CsvReader::GetInt(const CsvRow &row, size_t column) const {
  auto value = GetOptionalInt(row, column);
  if (!value) Fail("missing integer in column " + std::to_string(column + 1));
  return *value;
}

std::optional<int64_t> CsvReader::GetOptionalInt(const CsvRow &row,
                                                 size_t column) const {
  const CsvField &f = row.at(column);
  if (!f || f->empty()) return std::nullopt;
  int64_t value = 0;
  auto [end, ec] = std::from_chars(f->data(), f->data() + f->size(), value);
  if (ec != std::errc() || end != f->data() + f->size()) {
    Fail("bad integer '" + *f + "' in column " + std::to_string(column + 1));
  }
  return value;
}

bool CsvReader::GetBool(const CsvRow &row, size_t column) const {
  const CsvField &f = row.at(column);
  if (f && *f == "1") return true;
  if (f && *f == "0") return false;
  Fail("bad boolean in column " + std::to_string(column + 1));
}

std::string CsvReader::GetString(const CsvRow &row, size_t column) const {
  const CsvField &f = row.at(column);
  return f ? *f : std::string();
}

}  // namespace wikilinks
