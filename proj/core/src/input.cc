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

#include "wikilinks/input.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <boost/iostreams/filter/bzip2.hpp>
#include <boost/iostreams/filter/gzip.hpp>
#include <boost/iostreams/filtering_stream.hpp>

#include "wikilinks/error.h"

namespace wikilinks {

namespace io = boost::iostreams;

Codec ParseCodec(std::string_view name) {
  if (name == "auto") return Codec::kAuto;
  if (name == "plain") return Codec::kPlain;
  if (name == "gzip" || name == "gz") return Codec::kGzip;
  if (name == "bzip2" || name == "bz2") return Codec::kBzip2;
  if (name == "7z" || name == "7z-external") return Codec::kSevenZip;
  throw ConfigError("unknown codec '" + std::string(name) + "'");
}

std::string_view CodecName(Codec codec) {
  switch (codec) {
    case Codec::kAuto:
      return "auto";
    case Codec::kPlain:
      return "plain";
    case Codec::kGzip:
      return "gzip";
    case Codec::kBzip2:
      return "bzip2";
    case Codec::kSevenZip:
      return "7z";
  }
  return "?";
}

Codec DetectCodec(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".gz")) return Codec::kGzip;
  if (ends_with(".bz2")) return Codec::kBzip2;
  if (ends_with(".7z")) return Codec::kSevenZip;
  return Codec::kPlain;
}

size_t StringSource::Read(char *buffer, size_t size) {
  size_t n = std::min(size, data_.size() - pos_);
  std::memcpy(buffer, data_.data() + pos_, n);
  pos_ += n;
  return n;
}

namespace {

class FilteredFileSource : public ByteSource {
 public:
  FilteredFileSource(const std::string &path, Codec codec)
      : path_(path), file_(path, std::ios::binary) {
    if (!file_) throw IoError("cannot open " + path);
    if (codec == Codec::kGzip) in_.push(io::gzip_decompressor());
    if (codec == Codec::kBzip2) in_.push(io::bzip2_decompressor());
    in_.push(file_);
    in_.exceptions(std::ios::badbit);
  }

  size_t Read(char *buffer, size_t size) override {
    try {
      in_.read(buffer, static_cast<std::streamsize>(size));
      return static_cast<size_t>(in_.gcount());
    } catch (const std::exception &e) {
      throw IoError(path_ + ": decode failed: " + e.what());
    }
  }

 private:
  std::string path_;
  std::ifstream file_;
  io::filtering_istream in_;
};

std::string ShellQuote(const std::string &s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('\'');
  return out;
}

class PipeSource : public ByteSource {
 public:
  explicit PipeSource(std::string command) : command_(std::move(command)) {
    pipe_ = ::popen(command_.c_str(), "r");
    if (pipe_ == nullptr) throw IoError("cannot run: " + command_);
  }

  ~PipeSource() override {
    if (pipe_ != nullptr) ::pclose(pipe_);
  }

  size_t Read(char *buffer, size_t size) override {
    if (pipe_ == nullptr) return 0;
    size_t n = std::fread(buffer, 1, size, pipe_);
    if (n == 0) {
      int status = ::pclose(pipe_);
      pipe_ = nullptr;
      if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        throw IoError("external decompressor failed: " + command_);
      }
    }
    return n;
  }

 private:
  std::string command_;
  FILE *pipe_ = nullptr;
};

}  // namespace

std::unique_ptr<ByteSource> OpenInput(const std::string &path,
                                      const InputOptions &options) {
  if (!std::filesystem::is_regular_file(path)) throw MissingInputError(path);
  Codec codec =
      options.codec == Codec::kAuto ? DetectCodec(path) : options.codec;
  if (codec == Codec::kSevenZip) {
    std::string command = options.sevenzip_command;
    size_t at = command.find("{path}");
    if (at == std::string::npos) {
      throw ConfigError("7z command must contain {path}: " + command);
    }
    command.replace(at, 6, ShellQuote(path));
    return std::make_unique<PipeSource>(command);
  }
  return std::make_unique<FilteredFileSource>(path, codec);
}

}  // namespace wikilinks
