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

#include "litreview/cts/retrieval.h"

#include <algorithm>
#include <cctype>

#include "litreview/error.h"
#include "litreview/ingest/citation_spans.h"
#include "litreview/ingest/sentences.h"
#include "litreview/ingest/taic.h"
#include "litreview/llm/tokens.h"
#include "litreview/metrics/rouge.h"
#include "litreview/metrics/tokenize.h"

namespace litreview::cts {
namespace {

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

bool Ranks(const CtsCandidate& a, const CtsCandidate& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.position < b.position;
}

std::string LineOf(const CtsCandidate& c) {
  std::string line;
  if (!c.section_heading.empty()) line += "[" + c.section_heading + "] ";
  return line + c.sentence;
}

}  // namespace

std::map<std::string, std::vector<std::string>> ExtractQuerySpans(
    std::string_view draft, std::span<const ingest::BibEntry> bibliography) {
  if (IsBlank(draft)) throw Error(ErrorCode::kInvalidArgument, "draft is empty");
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& entry : bibliography) out[entry.bib_id];
  for (auto& [bib_id, spans] : ingest::ExtractAllSpans(draft, bibliography, "draft")) {
    auto& texts = out[bib_id];
    for (const auto& span : spans) texts.push_back(span.Text());
  }
  return out;
}

double ScoreCandidate(std::string_view query, std::string_view sentence, bool* empty_query) {
  const auto reference = metrics::TokenizeForMetrics(query);
  if (empty_query) *empty_query = reference.empty();
  if (reference.empty()) return 0.0;
  const auto candidate = metrics::TokenizeForMetrics(sentence);
  return (metrics::RougeN(candidate, reference, 1).recall +
          metrics::RougeN(candidate, reference, 2).recall) /
         2.0;
}

std::vector<CtsCandidate> CandidateSentences(const ingest::PaperRecord& record,
                                             bool exclude_related_work) {
  std::vector<CtsCandidate> out;
  std::size_t position = 0;
  const auto kinds = ingest::ClassifySections(record.sections);
  for (size_t i = 0; i < record.sections.size(); ++i) {
    const auto& section = record.sections[i];
    const auto sentences = ingest::SegmentSentences(section.body);
    const bool skip = exclude_related_work && kinds[i] == ingest::HeadingKind::kRelatedWork;
    for (const auto& s : sentences) {
      if (!skip) out.push_back({s.text, section.heading, position, 0.0});
      ++position;
    }
  }
  return out;
}

int CandidateLineTokens(const CtsCandidate& candidate) {
  return llm::EstimateTokens(LineOf(candidate) + "\n");
}

CtsSelection SelectCts(const CtsQuery& query, std::vector<CtsCandidate> pool) {
  if (query.k_cap < 1 || query.k_cap > kMaxK) {
    throw Error(ErrorCode::kInvalidArgument,
                "k_cap must be between 1 and " + std::to_string(kMaxK) + ", got " +
                    std::to_string(query.k_cap));
  }
  for (auto& c : pool) c.score = ScoreCandidate(query.query_span, c.sentence);
  std::sort(pool.begin(), pool.end(), Ranks);
  if (pool.size() > static_cast<size_t>(query.k_cap)) pool.resize(query.k_cap);
  if (query.token_budget > 0) {
    int total = 0;
    for (const auto& c : pool) total += CandidateLineTokens(c);
    while (!pool.empty() && total > query.token_budget) {
      total -= CandidateLineTokens(pool.back());
      pool.pop_back();
    }
  }
  CtsSelection selection;
  selection.cited_id = query.cited_id;
  selection.k_effective = static_cast<int>(pool.size());
  selection.chosen = std::move(pool);
  return selection;
}

CtsSelection RetrieveCts(const CtsQuery& query, const ingest::PaperRecord& record,
                         bool exclude_related_work) {
  auto pool = CandidateSentences(record, exclude_related_work);
  if (pool.empty()) {
    throw Error(ErrorCode::kPrecondition,
                "paper '" + record.paper_id + "' has no body sentences to retrieve from");
  }
  return SelectCts(query, std::move(pool));
}

prompt::CtsLines ToCtsLines(const std::map<std::string, CtsSelection>& selections) {
  prompt::CtsLines lines;
  for (const auto& [id, selection] : selections) {
    auto& out = lines[id];
    for (const auto& c : selection.chosen) out.push_back({c.section_heading, c.sentence});
  }
  return lines;
}

prompt::PromptBundle AugmentWithCts(const ingest::TaicBundle& taic, const std::string& target_id,
                                    const prompt::GenerationUnit& unit,
                                    const graph::CitationNetwork& network,
                                    const std::map<std::string, CtsSelection>& selections,
                                    const prompt::GenerationOptions& options) {
  const prompt::CtsLines lines = ToCtsLines(selections);
  return prompt::RenderGenerationPrompt(prompt::VariantFeatures("H"), taic, target_id, unit,
                                        network, &lines, options);
}

nlohmann::json SelectionToJson(const CtsSelection& selection) {
  nlohmann::json chosen = nlohmann::json::array();
  for (const auto& c : selection.chosen) {
    chosen.push_back({{"sentence", c.sentence},
                      {"heading", c.section_heading},
                      {"position", c.position},
                      {"score", c.score}});
  }
  return {{"cited_id", selection.cited_id},
          {"k_effective", selection.k_effective},
          {"chosen", chosen}};
}

}  // namespace litreview::cts
