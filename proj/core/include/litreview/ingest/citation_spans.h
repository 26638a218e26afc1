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

#ifndef LITREVIEW_INGEST_CITATION_SPANS_H_
#define LITREVIEW_INGEST_CITATION_SPANS_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "litreview/ingest/citation_markers.h"
#include "litreview/ingest/paper_record.h"

namespace litreview::ingest {

// Maximum number of sentences in one span: the marker sentence plus up to two
// continuation sentences.
inline constexpr std::size_t kMaxSpanSentences = 3;

// Consecutive sentences of a host text that cite (or continue describing) one
// bibliography entry.
struct CitationSpan {
  std::string bib_id;
  std::vector<std::string> sentences;
  std::string host_paper_id;
  // Ordinal of the first sentence among all body sentences of the host.
  std::size_t position = 0;
  // How the host refers to the cited work, e.g. "Lee et al. (2020)" or "[7]".
  std::string marker;

  std::string Text() const;
  bool operator==(const CitationSpan&) const = default;
};

void to_json(nlohmann::json& j, const CitationSpan& span);
void from_json(const nlohmann::json& j, CitationSpan& span);

// True when a sentence opens with a pronominal cue that continues the
// description of the previously cited work ("Their ...", "They ...",
// "This approach ...").
bool StartsWithContinuationCue(std::string_view sentence);

// Spans citing `bib_id` across the record's section bodies, in document order.
// Throws Error{kNotFound} if the id is not in the bibliography.
std::vector<CitationSpan> ExtractCitationSpans(const PaperRecord& record,
                                               std::string_view bib_id);

// Spans for every resolved bib id mentioned in a free text (e.g. a generated
// draft). Positions start at `first_position`.
std::map<std::string, std::vector<CitationSpan>> ExtractAllSpans(
    std::string_view text, std::span<const BibEntry> bibliography,
    std::string_view host_paper_id, std::size_t first_position = 0);

}  // namespace litreview::ingest

#endif  // LITREVIEW_INGEST_CITATION_SPANS_H_
