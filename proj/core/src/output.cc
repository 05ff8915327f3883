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

#include "wikilinks/output.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <boost/iostreams/filter/gzip.hpp>
#include <boost/iostreams/filtering_stream.hpp>

#include "wikilinks/error.h"

namespace wikilinks {

namespace fs = std::filesystem;
namespace io = boost::iostreams;

fs::path ChecksumPath(const fs::path &path) {
  return fs::path(path.string() + ".sha256");
}

fs::path PartialMarkerPath(const fs::path &path) {
  return fs::path(path.string() + ".partial");
}

std::vector<ChecksumCheck> VerifyChecksums(const fs::path &dir) {
  std::vector<fs::path> sidecars, partials;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() == ".sha256") {
      sidecars.push_back(entry.path());
    } else if (entry.path().extension() == ".partial") {
      partials.push_back(entry.path());
    }
  }
  std::sort(sidecars.begin(), sidecars.end());
  std::sort(partials.begin(), partials.end());

  std::vector<ChecksumCheck> checks;
  for (const fs::path &marker : partials) {
    ChecksumCheck check;
    check.file = fs::path(marker).replace_extension();
    check.message = "incomplete output, see " + marker.string();
    checks.push_back(std::move(check));
  }
  for (const fs::path &sidecar : sidecars) {
    ChecksumCheck check;
    std::ifstream in(sidecar);
    std::string expected, name;
    in >> expected >> name;
    check.file = dir / name;
    if (expected.size() != 64 || name.empty()) {
      check.message = "unreadable checksum file " + sidecar.string();
    } else if (!fs::exists(check.file)) {
      check.message = "missing file " + check.file.string();
    } else {
      std::string actual = Sha256File(check.file);
      check.ok = actual == expected;
      check.message = check.ok ? "OK" : "checksum mismatch (expected " +
                                            expected + ", got " + actual + ")";
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

struct OutputFile::Stream {
  std::ofstream file;
  io::filtering_ostream out;
};

OutputFile::OutputFile(fs::path path, Compression compression)
    : path_(std::move(path)),
      tmp_path_(path_.string() + ".tmp"),
      stream_(std::make_unique<Stream>()) {
  stream_->file.open(tmp_path_, std::ios::binary | std::ios::trunc);
  if (!stream_->file) {
    throw IoError("cannot create " + tmp_path_.string());
  }
  if (compression == Compression::kGzip) {
    stream_->out.push(io::gzip_compressor(io::gzip_params(6)));
  }
  stream_->out.push(stream_->file);
  stream_->out.exceptions(std::ios::badbit);
}

OutputFile::OutputFile(fs::path path)
    : OutputFile(path, path.extension() == ".gz" ? Compression::kGzip
                                                 : Compression::kNone) {}

OutputFile::~OutputFile() {
  if (!committed_) Abandon("output was not completed");
}

void OutputFile::Write(std::string_view data) {
  try {
    stream_->out.write(data.data(), static_cast<std::streamsize>(data.size()));
  } catch (const std::exception &e) {
    Abandon(std::string("write failed: ") + e.what());
    throw IoError("write to " + tmp_path_.string() + " failed");
  }
  if (!stream_->out || !stream_->file) {
    Abandon("write failed");
    throw IoError("write to " + tmp_path_.string() + " failed");
  }
}

std::string OutputFile::Commit() {
  try {
    stream_->out.reset();
    stream_->file.close();
  } catch (const std::exception &e) {
    Abandon(std::string("close failed: ") + e.what());
    throw IoError("closing " + tmp_path_.string() + " failed");
  }
  if (stream_->file.fail()) {
    Abandon("close failed");
    throw IoError("closing " + tmp_path_.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp_path_, path_, ec);
  if (ec) {
    Abandon("rename failed: " + ec.message());
    throw IoError("cannot rename " + tmp_path_.string());
  }
  std::string digest = Sha256File(path_);
  {
    std::ofstream sidecar(ChecksumPath(path_), std::ios::trunc);
    sidecar << digest << "  " << path_.filename().string() << "\n";
    if (!sidecar) throw IoError("cannot write checksum for " + path_.string());
  }
  fs::remove(PartialMarkerPath(path_), ec);
  committed_ = true;
  return digest;
}

void OutputFile::Abandon(const std::string &reason) {
  if (committed_) return;
  committed_ = true;
  std::error_code ec;
  try {
    stream_->out.reset();
  } catch (...) {
  }
  stream_->file.close();
  fs::remove(tmp_path_, ec);
  std::ofstream marker(PartialMarkerPath(path_), std::ios::trunc);
  marker << reason << "\n";
}

}  // namespace wikilinks
