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

#ifndef LITREVIEW_INGEST_TAIC_H_
#define LITREVIEW_INGEST_TAIC_H_

#include <string>
#include <string_view>
#include <span>
#include <vector>

#include "litreview/ingest/paper_record.h"

namespace litreview::ingest {

// Title, abstract, introduction and conclusion of one paper.
struct TaicBundle {
  std::string title;
  std::string abstract;
  std::string introduction;
  std::string conclusion;
  std::vector<std::string> warnings;
};

enum class HeadingKind { kOther, kIntroduction, kConclusion, kRelatedWork };

// Case-folds, drops leading section numbering (arabic or roman) and replaces
// punctuation with single spaces: "2.1. Intro & Motivation" -> "intro motivation".
std::string NormalizeHeading(std::string_view heading);

// Word-boundary prefix match of the normalized heading against the fixed
// introduction / conclusion / related-work vocabularies, checked in that order.
HeadingKind ClassifyHeading(std::string_view heading);

// Leading numbering token of a heading ("2.1" for "2.1 Subword Models"), or "".
std::string HeadingNumber(std::string_view heading);

// Kind of every section in order. A numbered subsection whose own heading is
// unclassified inherits the kind of its numbered parent, so "2.1 Streaming"
// under "2 Related Work" counts as related work.
std::vector<HeadingKind> ClassifySections(std::span<const SectionBlock> sections);

TaicBundle ExtractTaic(const PaperRecord& record);

}  // namespace litreview::ingest

#endif  // LITREVIEW_INGEST_TAIC_H_
