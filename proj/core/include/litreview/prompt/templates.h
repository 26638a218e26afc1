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

#ifndef LITREVIEW_PROMPT_TEMPLATES_H_
#define LITREVIEW_PROMPT_TEMPLATES_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litreview/graph/faceted_summary.h"
#include "litreview/ingest/citation_spans.h"
#include "litreview/ingest/paper_record.h"

namespace litreview::prompt {

// How prompts name a paper: "{title} by {author} et al. {year}".
struct PaperRef {
  std::string title;
  std::string author;  // first author's last name
  std::optional<int> year;

  // "{author} et al. {year}"; a missing year renders as "n.d.".
  std::string Short() const;
  // "{title} by {author} et al. {year}"
  std::string Long() const;
};

PaperRef RefOf(const ingest::PaperRecord& record);

// Faceted-summary prompt over the record's title, abstract, introduction and
// conclusion. Throws Error{kInvalidArgument} when the abstract is empty.
std::string RenderFacetedPrompt(const ingest::PaperRecord& record);

// Pairwise relationship prompt. Spans are enumerated in the given order.
// Throws Error{kInvalidArgument} when `spans` is empty.
std::string RenderRelationPrompt(const PaperRef& citing, const graph::FacetedSummary& citing_summary,
                                 const PaperRef& cited, const graph::FacetedSummary& cited_summary,
                                 std::string_view marker_of_cited_in_citing,
                                 std::span<const std::string> spans);

struct UsageGroup {
  std::string citing_id;
  std::string relation_text;
  std::vector<std::string> fragments;
};

// Enriched-usage prompt. Groups are emitted in citing-id order. Throws
// Error{kInvalidArgument} when there are no groups.
std::string RenderUsagePrompt(const PaperRef& cited, std::vector<UsageGroup> groups);

// Main-idea prompt over a human-written related work section. Throws
// Error{kPrecondition} when `gold_related_work` is blank.
std::string RenderMainIdeaPrompt(std::string_view target_title,
                                 const graph::FacetedSummary& target_summary,
                                 std::string_view gold_related_work);

}  // namespace litreview::prompt

#endif  // LITREVIEW_PROMPT_TEMPLATES_H_
