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

#include "litreview/ingest/sentences.h"

#include <cctype>

namespace litreview::ingest {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool IsClosing(char c) { return c == ')' || c == ']' || c == '"' || c == '\''; }

bool EndsWithAbbreviation(std::string_view text, size_t dot,
                          std::span<const std::string> abbreviations) {
  const size_t end = dot + 1;
  for (const auto& abbr : abbreviations) {
    if (abbr.empty() || abbr.size() > end) continue;
    const size_t begin = end - abbr.size();
    if (text.substr(begin, abbr.size()) != abbr) continue;
    if (begin == 0) return true;
    unsigned char before = static_cast<unsigned char>(text[begin - 1]);
    if (!std::isalnum(before)) return true;
  }
  return false;
}

// True when a blank line (only spaces/tabs between two newlines) starts at i.
bool IsParagraphBreak(std::string_view text, size_t i) {
  if (text[i] != '\n') return false;
  for (size_t j = i + 1; j < text.size(); ++j) {
    if (text[j] == '\n') return true;
    if (text[j] != ' ' && text[j] != '\t' && text[j] != '\r') return false;
  }
  return false;
}

void Emit(std::string_view text, size_t begin, size_t end, std::vector<Sentence>& out) {
  while (begin < end && IsSpace(text[begin])) ++begin;
  while (end > begin && IsSpace(text[end - 1])) --end;
  if (begin == end) return;
  out.push_back(Sentence{std::string(text.substr(begin, end - begin)), begin, end});
}

}  // namespace

const std::vector<std::string>& DefaultAbbreviations() {
  static const std::vector<std::string> kAbbreviations = {"et al.", "e.g.", "i.e.",
                                                          "Fig.",   "Eq.",  "vs."};
  return kAbbreviations;
}

std::vector<Sentence> SegmentSentences(std::string_view text) {
  return SegmentSentences(text, DefaultAbbreviations());
}

std::vector<Sentence> SegmentSentences(std::string_view text,
                                       std::span<const std::string> abbreviations) {
  std::vector<Sentence> out;
  size_t begin = 0;
  const size_t n = text.size();
  for (size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (IsParagraphBreak(text, i)) {
      Emit(text, begin, i, out);
      begin = i + 1;
      continue;
    }
    if (c != '.' && c != '?' && c != '!') continue;

    size_t j = i + 1;
    while (j < n && (text[j] == '.' || text[j] == '?' || text[j] == '!')) ++j;
    while (j < n && IsClosing(text[j])) ++j;
    if (j >= n || !IsSpace(text[j])) continue;
    size_t k = j;
    while (k < n && IsSpace(text[k])) ++k;
    if (k >= n) continue;
    const unsigned char next = static_cast<unsigned char>(text[k]);
    if (!std::isupper(next) && next != '[') continue;
    if (c == '.' && j == i + 1 && EndsWithAbbreviation(text, i, abbreviations)) continue;

    Emit(text, begin, j, out);
    begin = j;
    i = j - 1;
  }
  Emit(text, begin, n, out);
  return out;
}

}  // namespace litreview::ingest
