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

#ifndef LITREVIEW_METRICS_STYLE_H_
#define LITREVIEW_METRICS_STYLE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litreview/ingest/citation_markers.h"

namespace litreview::metrics {

enum class DiscourseRole { kTransition, kSingleSummary, kNarrative, kReflection, kMultiSummary };
enum class CitationUsage { kDominant, kReference };

// "Transition", "Single-Sum", "Narrative", "Reflection", "Multi-Sum".
std::string_view DiscourseRoleName(DiscourseRole role);
std::optional<DiscourseRole> ParseDiscourseRole(std::string_view name);
std::string_view CitationUsageName(CitationUsage usage);
std::optional<CitationUsage> ParseCitationUsage(std::string_view name);

// One labelled sentence, as produced by an external discourse tagger.
struct StyleLabel {
  std::size_t sentence_index = 0;
  DiscourseRole role = DiscourseRole::kTransition;
  std::vector<CitationUsage> citation_types;
};

struct StyleDistribution {
  // Percent of sentences per role, in the closed-set order; roles that never
  // occur are omitted.
  std::vector<std::pair<DiscourseRole, double>> role_percent;
  double dominant_percent = 0.0;
  double reference_percent = 0.0;
  std::size_t sentences = 0;
  std::size_t citations = 0;
};

// Throws Error{kInvalidArgument} on an empty label list.
StyleDistribution ComputeStyleDistribution(std::span<const StyleLabel> labels);

// Heuristic stand-in for a trained citation-type tagger, not a replacement
// for one. Mentions carry offsets into `sentence`. A marker is dominant when
// it is the grammatical subject: not inside parentheses, in the first clause,
// not after a preposition, and followed by a verb. Everything else is a
// reference citation.
std::vector<CitationUsage> ClassifyCitationUsageHeuristic(
    std::string_view sentence, std::span<const ingest::CitationMention> mentions);

}  // namespace litreview::metrics

#endif  // LITREVIEW_METRICS_STYLE_H_
