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

#include "litreview/prompt/variant.h"

#include "litreview/error.h"

namespace litreview::prompt {

std::string_view FeatureKindName(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kMainIdea:
      return "main_idea";
    case FeatureKind::kTaic:
      return "taic";
    case FeatureKind::kFacetedSummary:
      return "faceted_summary";
    case FeatureKind::kCitedAbstract:
      return "cited_abstract";
    case FeatureKind::kUsage:
      return "usage";
    case FeatureKind::kRelationship:
      return "relationship";
    case FeatureKind::kCts:
      return "cts";
  }
  return "unknown";
}

std::set<FeatureKind> VariantSpec::Features() const {
  std::set<FeatureKind> out;
  if (use_main_idea) out.insert(FeatureKind::kMainIdea);
  if (use_taic) out.insert(FeatureKind::kTaic);
  out.insert(node_mode == NodeMode::kFaceted ? FeatureKind::kFacetedSummary
                                             : FeatureKind::kCitedAbstract);
  if (use_usage) out.insert(FeatureKind::kUsage);
  if (use_relationship) out.insert(FeatureKind::kRelationship);
  if (use_cts) out.insert(FeatureKind::kCts);
  return out;
}

VariantSpec VariantFeatures(std::string_view variant_id) {
  VariantSpec v;
  v.variant_id = std::string(variant_id);
  if (variant_id == "A") return v;
  if (variant_id == "B") {
    v.use_main_idea = false;
  } else if (variant_id == "C") {
    v.use_taic = false;
  } else if (variant_id == "D") {
    v.node_mode = NodeMode::kAbstract;
  } else if (variant_id == "E") {
    v.use_usage = false;
  } else if (variant_id == "F") {
    v.use_relationship = false;
  } else if (variant_id == "G") {
    v.use_usage = false;
    v.use_relationship = false;
  } else if (variant_id == "H") {
    v.use_cts = true;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown variant '" + std::string(variant_id) + "'; expected one of A-H");
  }
  return v;
}

const std::vector<std::string>& AllVariantIds() {
  static const std::vector<std::string> kIds = {"A", "B", "C", "D", "E", "F", "G", "H"};
  return kIds;
}

}  // namespace litreview::prompt
