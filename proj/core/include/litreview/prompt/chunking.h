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

#ifndef LITREVIEW_PROMPT_CHUNKING_H_
#define LITREVIEW_PROMPT_CHUNKING_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litreview/ingest/paper_record.h"
#include "litreview/prompt/generation.h"

namespace litreview::prompt {

struct ChunkItem {
  std::string paper_id;
  int tokens = 0;  // the paper's block in a generation prompt
};

struct LayoutGroup {
  std::string label;
  std::vector<std::string> cited_ids;
};

enum class ChunkMethod { kSingle, kGoldLayout, kGreedy };

std::string_view ChunkMethodName(ChunkMethod method);

struct ChunkPlan {
  ChunkMethod method = ChunkMethod::kSingle;
  std::vector<GenerationUnit> units;
  std::vector<std::string> warnings;
};

// One unit when everything fits; otherwise one unit per layout group (in
// layout order, oversized groups split greedily), or greedy order-preserving
// packing without a layout. Each unit costs `fixed_overhead` plus its items.
// Throws Error{kInvalidArgument} when budget <= fixed_overhead or the layout
// does not partition the items, and Error{kBudgetExceeded} naming a paper
// whose block alone cannot fit.
ChunkPlan PlanChunks(std::span<const ChunkItem> cited,
                     const std::optional<std::vector<LayoutGroup>>& gold_layout, int budget,
                     int fixed_overhead);

// Groups the cited papers by where a related work text first mentions them:
// by "# " subsection when headings exist, else by paragraph. `cited` gives
// each paper's bibliography metadata with bib_id = paper id. Papers never
// mentioned join the last group. Empty groups are dropped.
std::vector<LayoutGroup> LayoutFromRelatedWork(std::string_view related_work,
                                               std::span<const ingest::BibEntry> cited);

// The related work text without "# " heading lines.
std::string RelatedWorkBody(std::string_view related_work);

}  // namespace litreview::prompt

#endif  // LITREVIEW_PROMPT_CHUNKING_H_
