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

#ifndef LITREVIEW_PROMPT_PLAN_FILE_H_
#define LITREVIEW_PROMPT_PLAN_FILE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "litreview/prompt/generation.h"

namespace litreview::prompt {

enum class PlanSource { kHumanProvided, kCondensedFromGold };

struct PlanEntry {
  std::string label;  // from an optional "# label" first line
  std::string text;
};

struct MainIdeaPlan {
  std::vector<PlanEntry> entries;
  PlanSource source = PlanSource::kHumanProvided;
};

// Units are separated by a line consisting of "---"; each may start with a
// "# label" line. Blank entries are dropped.
MainIdeaPlan ParsePlanFile(std::string_view text);
MainIdeaPlan LoadPlanFile(const std::filesystem::path& path);

// Sets units[i].main_idea. A single unit receives every entry joined by blank
// lines; with fewer entries than units the last entry is reused. Returns
// warnings. Throws Error{kPrecondition} when the plan is empty.
std::vector<std::string> AssignMainIdeas(const MainIdeaPlan& plan,
                                         std::vector<GenerationUnit>& units);

}  // namespace litreview::prompt

#endif  // LITREVIEW_PROMPT_PLAN_FILE_H_
