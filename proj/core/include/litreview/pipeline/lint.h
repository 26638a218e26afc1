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

#ifndef LITREVIEW_PIPELINE_LINT_H_
#define LITREVIEW_PIPELINE_LINT_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "litreview/ingest/paper_record.h"

namespace litreview::pipeline {

struct LintReport {
  // Expected ids never mentioned, in expected order.
  std::vector<std::string> dropped;
  // Both author-year and numeric markers occur.
  bool mixed_styles = false;
  int author_year_mentions = 0;
  int numeric_mentions = 0;
  std::map<std::string, int> mention_counts;  // per expected id
  // Mentioned more than twice the mean and at least three times.
  std::vector<std::string> over_emphasized;
  std::vector<std::string> warnings;

  // No findings; counts alone do not make a report non-empty.
  bool clean() const;
};

LintReport LintGeneration(std::string_view output, std::span<const std::string> expected_ids,
                          std::span<const ingest::BibEntry> bibliography);

nlohmann::json LintToJson(const LintReport& report);

}  // namespace litreview::pipeline

#endif  // LITREVIEW_PIPELINE_LINT_H_
