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

#ifndef LITREVIEW_PIPELINE_CONFIG_H_
#define LITREVIEW_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "litreview/llm/types.h"

namespace litreview::pipeline {

struct CorrelationInput {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct RunConfig {
  std::filesystem::path target;
  // Record files or directories of *.json records.
  std::vector<std::filesystem::path> cited;
  std::vector<std::filesystem::path> extra_citing;
  std::vector<std::string> variants;
  llm::BackendProfile extraction_profile;
  llm::BackendProfile generation_profile;
  // Input token budget for generation prompts.
  int token_budget = 8000;
  int k_cap = 10;
  std::optional<std::filesystem::path> plan_file;
  std::optional<std::filesystem::path> gold_file;
  std::filesystem::path out_dir;
  // Recorded for provenance; no stage currently draws random numbers.
  std::uint64_t seed = 0;
  int max_in_flight = 4;
  std::string field_of_study = "NLP";
  bool exclude_related_work_from_cts = true;
  std::vector<CorrelationInput> correlations;
  // The parsed config document, for the manifest digest.
  nlohmann::json source;
};

// Relative paths resolve against `base_dir`. Throws Error{kInvalidArgument}
// on invalid settings and Error{kParse} on malformed JSON.
RunConfig RunConfigFromJson(const nlohmann::json& j, const std::filesystem::path& base_dir);
RunConfig LoadRunConfig(const std::filesystem::path& path);

// Checks the cross-field invariants: at least one variant, a positive budget,
// k_cap in range, and a plan or related work text when a variant needs main
// ideas.
void ValidateRunConfig(const RunConfig& config);

// Files as given; directories expand to their *.json files in name order.
std::vector<std::filesystem::path> ExpandRecordPaths(
    const std::vector<std::filesystem::path>& paths);

}  // namespace litreview::pipeline

#endif  // LITREVIEW_PIPELINE_CONFIG_H_
