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

// wikilinks: full-history MediaWiki dumps to yearly wikilink graphs.
//
//   wikilinks extract  --lang en --output-dir out dump1.xml.bz2 ...
//   wikilinks snapshot --lang en --output-dir out [--date 2018-03-01 ...]
//   wikilinks graph    --lang en --output-dir out
//   wikilinks pagerank --lang en --output-dir out --top 100
//   wikilinks stats    --lang en --output-dir out
//   wikilinks verify   --output-dir out
//
// Exit status: 0 ok, 1 processing error, 2 usage error or missing input.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wikilinks/error.h"
#include "wikilinks/stages.h"

namespace {

using wikilinks::RunConfig;

constexpr int kExitFatal = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::vector<std::string> dates;
  std::string codec = "auto";
  size_t sort_memory_mb = 256;
};

void AddCommonOptions(CLI::App *cmd, RunConfig *config, Flags *flags) {
  cmd->add_option("--lang", config->language, "Wiki language code")
      ->capture_default_str();
  cmd->add_option("--output-dir", config->output_dir,
                  "Directory for all stage outputs")
      ->capture_default_str();
  cmd->add_option("--jobs", config->jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--date", flags->dates,
                  "Snapshot date YYYY-MM-DD, repeatable (default: March 1st "
                  "of 2001 to 2018)");
}

void AddExtractOptions(CLI::App *cmd, RunConfig *config, Flags *flags) {
  cmd->add_option("inputs", config->inputs, "Dump files")->required();
  cmd->add_flag("--strip-inert-spans", config->strip_inert_spans,
                "Ignore links inside comments and nowiki spans");
  cmd->add_option("--codec", flags->codec,
                  "auto, plain, gzip, bzip2 or 7z (external command)")
      ->capture_default_str();
  cmd->add_option("--sevenzip-cmd", config->input.sevenzip_command,
                  "Command printing a decoded 7z archive; {path} is replaced "
                  "by the input path")
      ->capture_default_str();
  cmd->add_option("--profiles", config->profiles_path,
                  "JSON file with redirect keywords per language");
}

void Finalize(RunConfig *config, const Flags &flags) {
  if (!flags.dates.empty()) {
    config->dates.clear();
    for (const std::string &text : flags.dates) {
      auto date = wikilinks::ParseDate(text);
      if (!date) throw wikilinks::ConfigError("bad --date '" + text + "'");
      config->dates.push_back(wikilinks::SnapshotDate{*date});
    }
  }
  config->input.codec = wikilinks::ParseCodec(flags.codec);
  config->sort_memory_bytes = flags.sort_memory_mb << 20;
  wikilinks::ValidateConfig(*config);
}

int Run(int argc, char **argv) {
  CLI::App app{"Temporal wikilink graphs from MediaWiki history dumps"};
  app.require_subcommand(1);

  RunConfig config;
  config.log = &std::cerr;
  Flags flags;

  auto *extract = app.add_subcommand("extract", "Extract links and redirects");
  AddCommonOptions(extract, &config, &flags);
  AddExtractOptions(extract, &config, &flags);

  auto *snapshot =
      app.add_subcommand("snapshot", "Resolve redirects and link snapshots");
  AddCommonOptions(snapshot, &config, &flags);

  auto *graph = app.add_subcommand("graph", "Build edge lists");
  AddCommonOptions(graph, &config, &flags);
  graph->add_flag("--drop-self-loops", config.drop_self_loops,
                  "Omit edges from a page to itself");
  graph->add_option("--sort-memory-mb", flags.sort_memory_mb,
                    "Memory for sorting edges before spilling to disk")
      ->capture_default_str();

  auto *pagerank = app.add_subcommand("pagerank", "Rank articles");
  AddCommonOptions(pagerank, &config, &flags);
  pagerank->add_option("--top", config.top, "Rows kept per ranking (0: all)")
      ->capture_default_str();
  pagerank->add_option("--damping", config.pagerank.damping)
      ->capture_default_str();
  pagerank->add_option("--tolerance", config.pagerank.tolerance)
      ->capture_default_str();
  pagerank->add_option("--max-iter", config.pagerank.max_iterations)
      ->capture_default_str();

  auto *stats = app.add_subcommand("stats", "Node and edge counts per date");
  AddCommonOptions(stats, &config, &flags);

  auto *verify = app.add_subcommand("verify", "Check output checksums");
  verify->add_option("--output-dir", config.output_dir)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Finalize(&config, flags);
    if (extract->parsed()) {
      wikilinks::RunExtract(config);
    } else if (snapshot->parsed()) {
      wikilinks::RunSnapshot(config);
    } else if (graph->parsed()) {
      wikilinks::RunGraph(config);
    } else if (pagerank->parsed()) {
      wikilinks::RunPageRank(config);
    } else if (stats->parsed()) {
      wikilinks::RunStats(config);
    } else if (verify->parsed()) {
      bool ok = true;
      for (const auto &check : wikilinks::RunVerify(config)) {
        std::cout << (check.ok ? "OK   " : "FAIL ") << check.file.string();
        if (!check.ok) std::cout << ": " << check.message;
        std::cout << '\n';
        ok = ok && check.ok;
      }
      return ok ? 0 : kExitFatal;
    }
  } catch (const wikilinks::MissingInputError &e) {
    std::cerr << "wikilinks: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wikilinks::ConfigError &e) {
    std::cerr << "wikilinks: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "wikilinks: " << e.what() << '\n';
    return kExitFatal;
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) { return Run(argc, argv); }
