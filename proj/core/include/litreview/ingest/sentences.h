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

#ifndef LITREVIEW_INGEST_SENTENCES_H_
#define LITREVIEW_INGEST_SENTENCES_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace litreview::ingest {

// A sentence and its byte range [start, end) in the host text. The text is
// the trimmed slice, so text == host.substr(start, end - start).
struct Sentence {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;
};

// et al., e.g., i.e., Fig., Eq., vs.
const std::vector<std::string>& DefaultAbbreviations();

// Rule-based splitter: a boundary is one of . ? ! (plus any closing quotes or
// brackets) followed by whitespace and an upper-case letter or '['. A period
// that ends one of `abbreviations` never splits. Blank lines always split.
std::vector<Sentence> SegmentSentences(std::string_view text);
std::vector<Sentence> SegmentSentences(std::string_view text,
                                       std::span<const std::string> abbreviations);

}  // namespace litreview::ingest

#endif  // LITREVIEW_INGEST_SENTENCES_H_
