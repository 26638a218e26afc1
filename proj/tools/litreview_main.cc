// Copyright 2026 The litreview Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// litreview: related work generation pipeline.
//
//   litreview features --config run.json [--out DIR]
//   litreview generate --config run.json --variant A [--variant H ...]
//   litreview evaluate --config run.json
//   litreview lint --config run.json
//   litreview run --config run.json

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "litreview/error.h"
#include "litreview/pipeline/config.h"
#include "litreview/pipeline/pipeline.h"

namespace {

using litreview::pipeline::RunConfig;

int Report(const litreview::pipeline::RunManifest& m) {
  int failures = 0;
  for (const auto& v : m.variants) {
    if (v.ok) {
      std::cout << "variant " << v.variant_id << ": ok (" << v.units.size() << " unit"
                << (v.units.size() == 1 ? "" : "s") << ", " << v.chunk_method << ")\n";
    } else {
      ++failures;
      std::cout << "variant " << v.variant_id << ": FAILED " << v.error << "\n";
    }
    for (const auto& w : v.warnings) std::cout << "  warning: " << w << "\n";
  }
  std::cout << m.calls.size() << " backend calls, cache " << m.cache_hits << " hits / "
            << m.cache_misses << " misses\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate and evaluate related work sections from a citation network"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> variants;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Run configuration (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", out_dir, "Output directory (overrides out_dir in the config)");
  };
  CLI::App* features = app.add_subcommand("features", "Build the citation network and cache");
  add_common(features);
  CLI::App* generate = app.add_subcommand("generate", "Generate one or more variants");
  add_common(generate);
  generate->add_option("--variant", variants, "Variant id A-H (repeatable)")->required();
  CLI::App* evaluate = app.add_subcommand("evaluate", "Score outputs already generated");
  add_common(evaluate);
  CLI::App* lint = app.add_subcommand("lint", "Check outputs for dropped or inconsistent citations");
  add_common(lint);
  CLI::App* run = app.add_subcommand("run", "All stages for every configured variant");
  add_common(run);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig config = litreview::pipeline::LoadRunConfig(config_path);
    if (!out_dir.empty()) config.out_dir = std::filesystem::absolute(out_dir);
    litreview::pipeline::PipelineOptions options;

    if (features->parsed()) {
      options.generate = false;
      auto m = litreview::pipeline::RunPipeline(config, options);
      std::cout << "network written to " << (config.out_dir / "network.json").string() << "\n";
      return Report(m);
    }
    if (generate->parsed()) {
      options.variants = variants;
      options.evaluate = false;
      return Report(litreview::pipeline::RunPipeline(config, options));
    }
    if (run->parsed()) return Report(litreview::pipeline::RunPipeline(config, options));
    if (evaluate->parsed()) {
      auto report = litreview::pipeline::EvaluateOutputs(config);
      std::cout << litreview::pipeline::MetricsToCsv(report);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
      return 0;
    }
    if (lint->parsed()) {
      int dirty = 0;
      for (const auto& [variant, r] : litreview::pipeline::LintOutputs(config)) {
        std::cout << variant << ": " << (r.clean() ? "clean" : "findings");
        if (!r.dropped.empty()) {
          std::cout << ", dropped";
          for (const auto& id : r.dropped) std::cout << " " << id;
        }
        if (r.mixed_styles) std::cout << ", mixed citation styles";
        std::cout << "\n";
        dirty += r.clean() ? 0 : 1;
      }
      return dirty == 0 ? 0 : 2;
    }
  } catch (const litreview::Error& e) {
    std::cerr << "error [" << litreview::ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
