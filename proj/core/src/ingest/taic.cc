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

#include "litreview/ingest/taic.h"

#include <array>
#include <cctype>
#include <sstream>

namespace litreview::ingest {
namespace {

bool IsRomanNumeral(std::string_view token) {
  if (token.empty() || token.size() > 5) return false;
  for (char c : token) {
    if (c != 'i' && c != 'v' && c != 'x') return false;
  }
  return true;
}

bool IsAllDigits(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool WordPrefix(std::string_view normalized, std::string_view prefix) {
  if (normalized.substr(0, prefix.size()) != prefix) return false;
  return normalized.size() == prefix.size() || normalized[prefix.size()] == ' ';
}

constexpr std::array<std::string_view, 2> kIntroduction = {"introduction", "intro"};
constexpr std::array<std::string_view, 3> kConclusion = {
    "conclusion", "conclusions", "discussion and conclusion"};
constexpr std::array<std::string_view, 5> kRelatedWork = {
    "related work", "related works", "background", "literature review", "prior work"};

}  // namespace

std::string NormalizeHeading(std::string_view heading) {
  std::vector<std::string> tokens;
  std::string current;
  for (char raw : heading) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (std::isalnum(c) || c >= 0x80) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));

  size_t first = 0;
  // Keep at least one token so a heading like "IV" stays non-empty.
  while (first + 1 < tokens.size() &&
         (IsAllDigits(tokens[first]) || IsRomanNumeral(tokens[first]))) {
    ++first;
  }
  std::string out;
  for (size_t i = first; i < tokens.size(); ++i) {
    if (!out.empty()) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

HeadingKind ClassifyHeading(std::string_view heading) {
  const std::string norm = NormalizeHeading(heading);
  for (auto p : kIntroduction) {
    if (WordPrefix(norm, p)) return HeadingKind::kIntroduction;
  }
  for (auto p : kConclusion) {
    if (WordPrefix(norm, p)) return HeadingKind::kConclusion;
  }
  for (auto p : kRelatedWork) {
    if (WordPrefix(norm, p)) return HeadingKind::kRelatedWork;
  }
  return HeadingKind::kOther;
}

std::string HeadingNumber(std::string_view heading) {
  size_t i = 0;
  while (i < heading.size() && heading[i] == ' ') ++i;
  size_t start = i;
  while (i < heading.size() &&
         (std::isdigit(static_cast<unsigned char>(heading[i])) || heading[i] == '.')) {
    ++i;
  }
  std::string number(heading.substr(start, i - start));
  while (!number.empty() && number.back() == '.') number.pop_back();
  return number;
}

std::vector<HeadingKind> ClassifySections(std::span<const SectionBlock> sections) {
  std::vector<HeadingKind> kinds;
  kinds.reserve(sections.size());
  // (number, kind) of the enclosing numbered sections, outermost first.
  std::vector<std::pair<std::string, HeadingKind>> open;
  for (const auto& section : sections) {
    HeadingKind kind = ClassifyHeading(section.heading);
    const std::string number = HeadingNumber(section.heading);
    if (!number.empty()) {
      while (!open.empty() && !number.starts_with(open.back().first + ".")) open.pop_back();
      if (kind == HeadingKind::kOther && !open.empty()) kind = open.back().second;
      open.emplace_back(number, kind);
    }
    kinds.push_back(kind);
  }
  return kinds;
}

TaicBundle ExtractTaic(const PaperRecord& record) {
  TaicBundle taic;
  taic.title = record.title;
  taic.abstract = record.abstract;
  const std::vector<HeadingKind> kinds = ClassifySections(record.sections);
  for (size_t i = 0; i < record.sections.size(); ++i) {
    const SectionBlock& section = record.sections[i];
    std::string* target = nullptr;
    switch (kinds[i]) {
      case HeadingKind::kIntroduction:
        target = &taic.introduction;
        break;
      case HeadingKind::kConclusion:
        target = &taic.conclusion;
        break;
      default:
        break;
    }
    if (target == nullptr || section.body.empty()) continue;
    if (!target->empty()) *target += "\n\n";
    *target += section.body;
  }
  if (taic.title.empty()) taic.warnings.push_back(record.paper_id + ": empty title");
  if (taic.abstract.empty()) taic.warnings.push_back(record.paper_id + ": empty abstract");
  if (taic.introduction.empty()) {
    taic.warnings.push_back(record.paper_id + ": no introduction-like section");
  }
  if (taic.conclusion.empty()) {
    taic.warnings.push_back(record.paper_id + ": no conclusion-like section");
  }
  return taic;
}

}  // namespace litreview::ingest
