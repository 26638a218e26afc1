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

#ifndef LITREVIEW_PROMPT_VARIANT_H_
#define LITREVIEW_PROMPT_VARIANT_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace litreview::prompt {

enum class NodeMode { kFaceted, kAbstract };

// Feature kinds a generation prompt can carry. The names double as digest
// tags in PromptBundle.
enum class FeatureKind {
  kMainIdea,
  kTaic,
  kFacetedSummary,
  kCitedAbstract,
  kUsage,
  kRelationship,
  kCts,
};

std::string_view FeatureKindName(FeatureKind kind);

struct VariantSpec {
  std::string variant_id;
  bool use_main_idea = true;
  bool use_taic = true;
  NodeMode node_mode = NodeMode::kFaceted;
  bool use_usage = true;
  bool use_relationship = true;
  bool use_cts = false;

  // The feature kinds this variant puts into a prompt.
  std::set<FeatureKind> Features() const;

  bool operator==(const VariantSpec&) const = default;
};

// Columns A..H of the ablation matrix. Throws Error{kInvalidArgument} for
// any other id.
VariantSpec VariantFeatures(std::string_view variant_id);

const std::vector<std::string>& AllVariantIds();

}  // namespace litreview::prompt

#endif  // LITREVIEW_PROMPT_VARIANT_H_
