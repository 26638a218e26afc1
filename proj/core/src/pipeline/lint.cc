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

#include "litreview/pipeline/lint.h"

#include "litreview/ingest/citation_markers.h"

namespace litreview::pipeline {

bool LintReport::clean() const {
  return dropped.empty() && !mixed_styles && over_emphasized.empty() && warnings.empty();
}

LintReport LintGeneration(std::string_view output, std::span<const std::string> expected_ids,
                          std::span<const ingest::BibEntry> bibliography) {
  LintReport report;
  for (const auto& id : expected_ids) report.mention_counts[id] = 0;
  int unresolved = 0;
  for (const auto& m : ingest::DetectCitationMentions(output, bibliography)) {
    if (m.style == ingest::CitationStyle::kAuthorYear) {
      ++report.author_year_mentions;
    } else {
      ++report.numeric_mentions;
    }
    if (!m.resolved()) {
      ++unresolved;
      continue;
    }
    auto it = report.mention_counts.find(m.bib_id);
    if (it != report.mention_counts.end()) ++it->second;
  }
  report.mixed_styles = report.author_year_mentions > 0 && report.numeric_mentions > 0;
  if (unresolved > 0) {
    report.warnings.push_back(std::to_string(unresolved) +
                              " citation markers do not resolve to a cited paper");
  }
  int total = 0;
  for (const auto& id : expected_ids) {
    const int n = report.mention_counts[id];
    total += n;
    if (n == 0) report.dropped.push_back(id);
  }
  if (!expected_ids.empty()) {
    const double mean = static_cast<double>(total) / static_cast<double>(expected_ids.size());
    for (const auto& id : expected_ids) {
      const int n = report.mention_counts[id];
      if (n >= 3 && n > 2.0 * mean) report.over_emphasized.push_back(id);
    }
  }
  return report;
}

nlohmann::json LintToJson(const LintReport& r) {
  return {{"dropped", r.dropped},
          {"mixed_styles", r.mixed_styles},
          {"author_year_mentions", r.author_year_mentions},
          {"numeric_mentions", r.numeric_mentions},
          {"mention_counts", r.mention_counts},
          {"over_emphasized", r.over_emphasized},
          {"warnings", r.warnings}};
}

}  // namespace litreview::pipeline
