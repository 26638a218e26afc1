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

#ifndef LITREVIEW_PIPELINE_PIPELINE_H_
#define LITREVIEW_PIPELINE_PIPELINE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "litreview/graph/network.h"
#include "litreview/ingest/paper_record.h"
#include "litreview/llm/client.h"
#include "litreview/llm/transport.h"
#include "litreview/pipeline/config.h"
#include "litreview/pipeline/evaluate.h"
#include "litreview/pipeline/lint.h"
#include "litreview/pipeline/manifest.h"

namespace litreview::pipeline {

struct PipelineOptions {
  // Transport for remote profiles; an HTTP transport when null.
  std::shared_ptr<llm::Transport> transport;
  llm::Sleeper sleeper;
  // Overrides RunConfig::variants when set.
  std::optional<std::vector<std::string>> variants;
  bool generate = true;
  bool lint = true;
  bool evaluate = true;
};

struct Corpus {
  ingest::PaperRecord target;
  std::vector<ingest::PaperRecord> cited;
  std::vector<ingest::PaperRecord> extra_citing;
};

Corpus LoadCorpus(const RunConfig& config);

// Bibliography entries (bib_id = paper id) for the cited papers in prompt
// order; numeric markers in generated text resolve against this order.
std::vector<ingest::BibEntry> CitedBibliography(std::span<const ingest::PaperRecord> cited);

// Blank-line separated paragraphs with any non-space content.
int CountParagraphs(std::string_view text);

// Runs the configured stages and writes everything under config.out_dir:
// out/<variant>.txt, network.json, feature_texts.json, cts/<id>.json,
// lint.json, metrics.json, metrics.csv and manifest.json. A failing variant
// is recorded in the manifest while the others proceed.
RunManifest RunPipeline(const RunConfig& config, const PipelineOptions& options = {});

// Re-evaluates the outputs already under config.out_dir and rewrites
// metrics.json and metrics.csv.
MetricsReport EvaluateOutputs(const RunConfig& config);

// Lints the outputs already under config.out_dir and rewrites lint.json.
std::map<std::string, LintReport> LintOutputs(const RunConfig& config);

}  // namespace litreview::pipeline

#endif  // LITREVIEW_PIPELINE_PIPELINE_H_
