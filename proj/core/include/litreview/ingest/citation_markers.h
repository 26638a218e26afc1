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

#ifndef LITREVIEW_INGEST_CITATION_MARKERS_H_
#define LITREVIEW_INGEST_CITATION_MARKERS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litreview/ingest/paper_record.h"

namespace litreview::ingest {

enum class CitationStyle { kAuthorYear, kNumeric };

std::string_view CitationStyleName(CitationStyle style);

// bib_id of a marker that matched the grammar but no bibliography entry.
inline constexpr std::string_view kUnresolvedBibId = "<unresolved>";

struct CitationMention {
  std::string bib_id;
  std::string surface;
  std::size_t start = 0;  // byte offsets into the host text, [start, end)
  std::size_t end = 0;
  CitationStyle style = CitationStyle::kAuthorYear;

  bool resolved() const { return bib_id != kUnresolvedBibId; }
  // How the host paper refers to the cited work: the author-year surface, or
  // "[n]" for numeric markers.
  std::string Marker() const;
};

// Finds author-year markers ("Smith et al. (2023)", "(Smith and Lee, 2020a;
// Kim, 2019)") and bracketed numeric markers ("[1, 3]", "[2-5]") in `text`.
// A numeric group yields one mention per cited number; items of a range share
// the range's span. When matches of different groups overlap, the longer one
// is kept. Output is sorted by start offset.
std::vector<CitationMention> DetectCitationMentions(std::string_view text,
                                                    std::span<const BibEntry> bibliography);

}  // namespace litreview::ingest

#endif  // LITREVIEW_INGEST_CITATION_MARKERS_H_
