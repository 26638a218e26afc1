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

#ifndef LITREVIEW_GRAPH_FACETED_SUMMARY_H_
#define LITREVIEW_GRAPH_FACETED_SUMMARY_H_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace litreview::graph {

struct FacetedSummary {
  std::string objective;
  std::string method;
  std::string findings;
  std::string contribution;
  std::vector<std::string> keywords;

  bool operator==(const FacetedSummary&) const = default;
};

// Canonical five-line block:
//   Objective: ...
//   Method: ...
//   Findings: ...
//   Contribution: ...
//   Keywords: a; b; c
std::string RenderFacetedBlock(const FacetedSummary& summary);

// Labeled-line parse. Labels are case-insensitive and may appear in any order;
// unlabeled lines continue the previous facet; blank lines are ignored.
// Keywords are split on ';' after dropping one trailing period. Throws
// Error{kParse} listing every missing label, with the completion as detail.
FacetedSummary ParseFacetedOutput(std::string_view completion);

void to_json(nlohmann::json& j, const FacetedSummary& summary);
void from_json(const nlohmann::json& j, FacetedSummary& summary);

}  // namespace litreview::graph

#endif  // LITREVIEW_GRAPH_FACETED_SUMMARY_H_
