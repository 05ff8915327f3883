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

#include <benchmark/benchmark.h>

#include "synthetic_dump.h"
#include "wikilinks/dump_reader.h"
#include "wikilinks/revision_pipeline.h"

namespace wikilinks {
namespace {

std::string Dump(int pages) {
  testing::SyntheticDumpOptions options;
  options.pages = pages;
  options.max_revisions = 10;
  return testing::SyntheticDump(options);
}

void BM_ParseDump(benchmark::State &state) {
  const std::string xml = Dump(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    DumpReader reader(std::make_unique<StringSource>(xml));
    int64_t revisions = 0;
    while (auto page = reader.Next()) revisions += page->revisions.size();
    benchmark::DoNotOptimize(revisions);
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(xml.size()));
}
BENCHMARK(BM_ParseDump)->Arg(100)->Arg(2000);

// Parsing plus link and redirect extraction, without output.
void BM_ExtractDump(benchmark::State &state) {
  const std::string xml = Dump(static_cast<int>(state.range(0)));
  const LanguageProfile profile = LanguageProfile::Builtin("en");
  for (auto _ : state) {
    DumpReader reader(std::make_unique<StringSource>(xml));
    VectorRawLinkSink sink;
    benchmark::DoNotOptimize(ExtractAll(&reader, profile, &sink));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(xml.size()));
}
BENCHMARK(BM_ExtractDump)->Arg(2000);

}  // namespace
}  // namespace wikilinks
