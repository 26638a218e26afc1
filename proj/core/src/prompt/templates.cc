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

#include "litreview/prompt/templates.h"

#include <algorithm>
#include <cctype>

#include "litreview/error.h"
#include "litreview/ingest/taic.h"

namespace litreview::prompt {
namespace {

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

// "Label: value", or just "Label:" when the value is empty.
std::string Field(std::string_view label, std::string_view value) {
  std::string out(label);
  out += ':';
  if (!value.empty()) {
    out += ' ';
    out += value;
  }
  return out;
}

}  // namespace

std::string PaperRef::Short() const {
  return author + " et al. " + (year ? std::to_string(*year) : std::string("n.d."));
}

std::string PaperRef::Long() const { return title + " by " + Short(); }

PaperRef RefOf(const ingest::PaperRecord& record) {
  return PaperRef{record.title, record.FirstAuthorLastName(), record.year};
}

std::string RenderFacetedPrompt(const ingest::PaperRecord& record) {
  if (IsBlank(record.abstract)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot summarize paper '" + record.paper_id + "': abstract is empty");
  }
  const ingest::TaicBundle taic = ingest::ExtractTaic(record);
  std::string out;
  out += Field("Title", taic.title) + "\n";
  out += Field("Abstract", taic.abstract) + "\n";
  out += Field("Introduction", taic.introduction) + "\n";
  out += Field("Conclusion", taic.conclusion) + "\n";
  out +=
      "What are the objective, method, findings, contributions and keywords of the paper above? "
      "Answer in the format of\n"
      "Objective: XXX.\n"
      "Method: XXX.\n"
      "Findings: XXX.\n"
      "Contribution: XXX.\n"
      "Keywords: A; B; C.";
  return out;
}

std::string RenderRelationPrompt(const PaperRef& citing, const graph::FacetedSummary& citing_summary,
                                 const PaperRef& cited, const graph::FacetedSummary& cited_summary,
                                 std::string_view marker, std::span<const std::string> spans) {
  if (spans.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "relationship prompt needs at least one citation span");
  }
  std::string out;
  out += "Faceted summary of the citing paper, " + citing.Long() + ":\n";
  out += graph::RenderFacetedBlock(citing_summary) + "\n";
  out += "Faceted summary of the cited paper, " + cited.Long() + ":\n";
  out += graph::RenderFacetedBlock(cited_summary) + "\n";
  out += "Citation contexts that " + citing.Short() + " cites " + cited.Short() +
         " (which is cited as " + std::string(marker) + "):\n";
  for (size_t i = 0; i < spans.size(); ++i) {
    out += std::to_string(i + 1) + ". " + spans[i] + "\n";
  }
  out += "Very briefly explain the relationship between " + citing.Short() + " and " +
         cited.Long() + ". TLDR:";
  return out;
}

std::string RenderUsagePrompt(const PaperRef& cited, std::vector<UsageGroup> groups) {
  if (groups.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "usage prompt needs at least one citing paper");
  }
  std::stable_sort(groups.begin(), groups.end(), [](const UsageGroup& a, const UsageGroup& b) {
    return a.citing_id < b.citing_id;
  });
  const std::string who = cited.Short();
  std::string out = "How other papers cite " + who + ":\n";
  for (const auto& group : groups) {
    out += group.relation_text + "\n";
    out += "Example citation fragments:\n";
    for (size_t i = 0; i < group.fragments.size(); ++i) {
      out += std::to_string(i + 1) + ". " + group.fragments[i] + "\n";
    }
  }
  out += "Very briefly answer what " + who +
         " is mostly known for, and the common citation intent. Hint: pay attention to how " +
         who + " is referred by the citing papers. Answer in the format of \"" + who +
         " is known for XXX and it is cited for YYY\". TLDR:";
  return out;
}

std::string RenderMainIdeaPrompt(std::string_view target_title,
                                 const graph::FacetedSummary& target_summary,
                                 std::string_view gold_related_work) {
  if (IsBlank(gold_related_work)) {
    throw Error(ErrorCode::kPrecondition,
                "no related work text to condense; supply a main-idea plan file instead");
  }
  std::string out;
  out += Field("Our title", target_title) + "\n";
  out += "Faceted summary of our paper:\n";
  out += graph::RenderFacetedBlock(target_summary) + "\n";
  out +=
      "Write a short summary of the main idea of the following related work section paragraphs. "
      "Ignore citations.\n";
  out += gold_related_work;
  return out;
}

}  // namespace litreview::prompt
