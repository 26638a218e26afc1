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

#ifndef LITREVIEW_GRAPH_USAGE_H_
#define LITREVIEW_GRAPH_USAGE_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "litreview/metrics/style.h"

namespace litreview::graph {

// How a cited paper is known and used by the papers citing it.
struct EnrichedUsage {
  std::string paper_id;
  std::string known_for;
  std::string cited_for;
  metrics::CitationUsage usage_class = metrics::CitationUsage::kDominant;
  // The completion verbatim; this is the text shown after "<Usage>".
  std::string summary;
  // True when neither "dominant" nor "reference" appeared and the keyword
  // rule decided.
  bool class_from_fallback = false;

  bool operator==(const EnrichedUsage&) const = default;
};

// Parses "... is known for X and it is cited for Y". Throws Error{kParse}
// with the completion as detail when either part is absent.
EnrichedUsage ParseEnrichedUsage(std::string_view completion, std::string paper_id);

// Literal "dominant"/"reference" token (earliest wins); otherwise phrases such
// as "as a tool", "as a baseline" or "for reference" mean reference and
// anything else dominant. `fallback` reports which path decided.
metrics::CitationUsage ClassifyUsage(std::string_view completion, bool* fallback);

void to_json(nlohmann::json& j, const EnrichedUsage& usage);
void from_json(const nlohmann::json& j, EnrichedUsage& usage);

}  // namespace litreview::graph

#endif  // LITREVIEW_GRAPH_USAGE_H_
