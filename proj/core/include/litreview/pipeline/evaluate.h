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

#ifndef LITREVIEW_PIPELINE_EVALUATE_H_
#define LITREVIEW_PIPELINE_EVALUATE_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "litreview/metrics/extractiveness.h"
#include "litreview/metrics/kendall.h"
#include "litreview/metrics/rouge.h"
#include "litreview/pipeline/config.h"

namespace litreview::pipeline {

struct VariantMetrics {
  std::string variant_id;
  std::optional<metrics::RougeScore> rouge1;
  std::optional<metrics::RougeScore> rouge2;
  std::optional<metrics::RougeScore> rougeL;
  metrics::ExtractivenessReport extractiveness;
};

struct NamedCorrelation {
  std::string name;
  metrics::CorrelationResult result;
};

struct MetricsReport {
  std::vector<VariantMetrics> variants;
  std::vector<NamedCorrelation> correlations;
  std::vector<std::string> warnings;
};

// Feature name -> the texts of that feature (one per paper, edge or unit).
using FeatureTexts = std::map<std::string, std::vector<std::string>>;

// Coverage and density of `generated` against each feature. Texts of one
// feature are concatenated with a separator token no fragment can cross.
metrics::ExtractivenessReport ComputeExtractiveness(std::string_view generated,
                                                    const FeatureTexts& features);

// ROUGE-1/2/L against the related work text when present (skipped with a
// warning otherwise), extractiveness per feature, and Kendall's tau for each
// supplied series pair.
MetricsReport EvaluateRun(const std::map<std::string, std::string>& outputs,
                          const std::optional<std::string>& gold, const FeatureTexts& features,
                          std::span<const CorrelationInput> correlations = {});

nlohmann::json MetricsToJson(const MetricsReport& report);

// One row per variant and metric: variant,metric,feature,precision,recall,f1,coverage,density
std::string MetricsToCsv(const MetricsReport& report);

}  // namespace litreview::pipeline

#endif  // LITREVIEW_PIPELINE_EVALUATE_H_
