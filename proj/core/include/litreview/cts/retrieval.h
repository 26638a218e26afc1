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

#ifndef LITREVIEW_CTS_RETRIEVAL_H_
#define LITREVIEW_CTS_RETRIEVAL_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "litreview/ingest/paper_record.h"
#include "litreview/prompt/generation.h"

namespace litreview::cts {

// Upper bound on retrieved sentences per cited paper.
inline constexpr int kMaxK = 10;

struct CtsQuery {
  std::string cited_id;
  std::string query_span;
  int k_cap = kMaxK;
  // Tokens the chosen sentences may use in a prompt; <= 0 means unlimited.
  int token_budget = 0;
};

struct CtsCandidate {
  std::string sentence;
  std::string section_heading;
  std::size_t position = 0;  // ordinal among the paper's body sentences
  double score = 0.0;

  bool operator==(const CtsCandidate&) const = default;
};

struct CtsSelection {
  std::string cited_id;
  std::vector<CtsCandidate> chosen;  // score descending, then position
  int k_effective = 0;
};

// Sentence-aligned spans of `draft` per bibliography entry; entries never
// mentioned map to empty lists. Throws Error{kInvalidArgument} on a blank
// draft.
std::map<std::string, std::vector<std::string>> ExtractQuerySpans(
    std::string_view draft, std::span<const ingest::BibEntry> bibliography);

// Mean of ROUGE-1 and ROUGE-2 recall with the query as reference and the
// sentence as candidate. An empty query scores 0 and sets *empty_query.
double ScoreCandidate(std::string_view query, std::string_view sentence,
                      bool* empty_query = nullptr);

// Every body sentence with its heading and position. Related-work sections
// are skipped when `exclude_related_work` is set.
std::vector<CtsCandidate> CandidateSentences(const ingest::PaperRecord& record,
                                             bool exclude_related_work = true);

// Estimated tokens of the prompt line for `candidate`.
int CandidateLineTokens(const CtsCandidate& candidate);

// Scores `pool`, keeps the top k_cap (earlier position on ties), then drops
// from the bottom until the lines fit query.token_budget. Throws
// Error{kInvalidArgument} unless 1 <= k_cap <= kMaxK.
CtsSelection SelectCts(const CtsQuery& query, std::vector<CtsCandidate> pool);

// SelectCts over CandidateSentences(record). Throws Error{kPrecondition}
// when the record has no body sentences.
CtsSelection RetrieveCts(const CtsQuery& query, const ingest::PaperRecord& record,
                         bool exclude_related_work = true);

prompt::CtsLines ToCtsLines(const std::map<std::string, CtsSelection>& selections);

// The variant-H prompt: the variant-A prompt for `unit` plus a block of
// retrieved sentences under each paper that has a selection.
prompt::PromptBundle AugmentWithCts(const ingest::TaicBundle& taic, const std::string& target_id,
                                    const prompt::GenerationUnit& unit,
                                    const graph::CitationNetwork& network,
                                    const std::map<std::string, CtsSelection>& selections,
                                    const prompt::GenerationOptions& options = {});

nlohmann::json SelectionToJson(const CtsSelection& selection);

}  // namespace litreview::cts

#endif  // LITREVIEW_CTS_RETRIEVAL_H_
