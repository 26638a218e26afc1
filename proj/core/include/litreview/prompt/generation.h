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

#ifndef LITREVIEW_PROMPT_GENERATION_H_
#define LITREVIEW_PROMPT_GENERATION_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "litreview/graph/network.h"
#include "litreview/ingest/taic.h"
#include "litreview/prompt/variant.h"

namespace litreview::prompt {

struct GenerationUnit {
  int unit_index = 0;
  std::vector<std::string> cited_ids;
  std::string label;  // layout group title, or "unit-<n>" when synthetic
  std::optional<std::string> main_idea;
  int estimated_tokens = 0;
};

struct FeatureDigest {
  FeatureKind kind = FeatureKind::kTaic;
  std::string paper_id;
  std::string sha256;

  bool operator==(const FeatureDigest&) const = default;
  auto operator<=>(const FeatureDigest&) const = default;
};

struct PromptBundle {
  std::string variant_id;
  int unit_index = 0;
  std::string system;
  std::string user;
  std::vector<FeatureDigest> digests;  // sorted
  int estimated_tokens = 0;

  std::set<FeatureKind> DigestKinds() const;
};

// One retrieved sentence shown under "Potentially useful sentences".
struct CtsLine {
  std::string heading;
  std::string sentence;
};

using CtsLines = std::map<std::string, std::vector<CtsLine>>;  // by cited id

struct GenerationOptions {
  std::string field_of_study = "NLP";
  // 0 disables the budget check.
  int token_budget = 0;
};

// Cited ids sorted by year (missing years last), then first-author last
// name, then id.
std::vector<std::string> ChronologicalOrder(const graph::CitationNetwork& network,
                                            std::vector<std::string> ids);

// The generation prompt for one unit. Throws Error{kNotFound} naming the
// paper and feature when a feature the variant needs is absent, and
// Error{kBudgetExceeded} when the prompt is over options.token_budget.
PromptBundle RenderGenerationPrompt(const VariantSpec& variant, const ingest::TaicBundle& taic,
                                    const std::string& target_id, const GenerationUnit& unit,
                                    const graph::CitationNetwork& network,
                                    const CtsLines* cts = nullptr,
                                    const GenerationOptions& options = {});

// Estimated tokens of the prompt with no cited papers listed.
int EstimateGenerationOverhead(const VariantSpec& variant, const ingest::TaicBundle& taic,
                               const std::optional<std::string>& main_idea,
                               const GenerationOptions& options = {});

// Estimated tokens one cited paper adds to a generation prompt.
int EstimatePaperBlock(const VariantSpec& variant, const graph::CitationNetwork& network,
                       const std::string& paper_id, const CtsLines* cts = nullptr);

nlohmann::json BundleToJson(const PromptBundle& bundle);

}  // namespace litreview::prompt

#endif  // LITREVIEW_PROMPT_GENERATION_H_
