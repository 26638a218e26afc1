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

#include "litreview/metrics/style.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "litreview/error.h"

namespace litreview::metrics {
namespace {

constexpr std::array<DiscourseRole, 5> kRoles = {
    DiscourseRole::kTransition, DiscourseRole::kSingleSummary, DiscourseRole::kNarrative,
    DiscourseRole::kReflection, DiscourseRole::kMultiSummary};

const std::set<std::string, std::less<>>& Prepositions() {
  static const std::set<std::string, std::less<>> kWords = {
      "by", "in", "of", "from", "to", "with", "as", "and", "than", "see", "cf",
      "like", "following", "following,", "on", "for", "via", "using", "or"};
  return kWords;
}

const std::set<std::string, std::less<>>& Verbs() {
  static const std::set<std::string, std::less<>> kWords = {
      "is", "are", "was", "were", "has", "have", "had", "can", "could", "may", "might",
      "will", "would", "propose", "proposes", "introduce", "introduces", "present",
      "presents", "show", "shows", "use", "uses", "apply", "applies", "develop", "develops",
      "extend", "extends", "study", "studies", "describe", "describes", "demonstrate",
      "demonstrates", "find", "finds", "found", "build", "builds", "built", "train",
      "trains", "leverage", "leverages", "explore", "explores", "investigate",
      "investigates", "report", "reports", "suggest", "suggests", "argue", "argues",
      "note", "notes", "observe", "observes", "employ", "employs", "adopt", "adopts",
      "focus", "focuses", "address", "addresses", "achieve", "achieves", "outperform",
      "outperforms", "compare", "compares", "collect", "collects", "design", "designs",
      "release", "releases", "provide", "provides", "treat", "treats", "frame", "frames",
      "learn", "learns", "make", "makes", "made", "take", "takes", "took", "define",
      "defines", "combine", "combines", "rely", "relies", "generate", "generates",
      "formulate", "formulates", "consider", "considers", "analyze", "analyzes",
      "analyse", "analyses", "evaluate", "evaluates", "examine", "examines", "construct",
      "constructs", "create", "creates", "model", "models", "distinguish",
      "distinguishes", "attempt", "attempts", "augment", "augments", "point", "points"};
  return kWords;
}

const std::set<std::string, std::less<>>& Adverbs() {
  static const std::set<std::string, std::less<>> kWords = {
      "also", "first", "further", "recently", "later", "then", "instead", "similarly",
      "additionally", "subsequently", "originally", "previously", "successfully", "both"};
  return kWords;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsWordChar(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80 || c == '-' || c == '\'';
}

std::vector<std::string> WordsAfter(std::string_view s, size_t pos, size_t count) {
  std::vector<std::string> words;
  size_t i = pos;
  while (i < s.size() && words.size() < count) {
    while (i < s.size() && !IsWordChar(s[i])) {
      // A clause break ends the search for the verb.
      if (s[i] == ',' || s[i] == ';' || s[i] == ':' || s[i] == '.' || s[i] == '(') return words;
      ++i;
    }
    size_t start = i;
    while (i < s.size() && IsWordChar(s[i])) ++i;
    if (i > start) words.push_back(Lower(s.substr(start, i - start)));
  }
  return words;
}

std::string WordBefore(std::string_view s, size_t pos) {
  size_t i = pos;
  while (i > 0 && (s[i - 1] == ' ' || s[i - 1] == '\t')) --i;
  size_t end = i;
  while (i > 0 && IsWordChar(s[i - 1])) --i;
  return Lower(s.substr(i, end - i));
}

bool LooksLikeVerb(const std::string& word) {
  if (Verbs().count(word) > 0) return true;
  return word.size() > 3 && word.compare(word.size() - 2, 2, "ed") == 0;
}

bool InsideParentheses(std::string_view s, size_t pos) {
  int depth = 0;
  for (size_t i = 0; i < pos && i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && depth > 0) --depth;
  }
  return depth > 0;
}

// Start of the marker as written: numeric mentions begin at their '['.
size_t MarkerStart(std::string_view s, const ingest::CitationMention& m) {
  if (m.style != ingest::CitationStyle::kNumeric) return m.start;
  size_t i = m.start;
  while (i > 0 && s[i - 1] != '[') --i;
  return i > 0 ? i - 1 : m.start;
}

size_t MarkerEnd(std::string_view s, const ingest::CitationMention& m) {
  if (m.style != ingest::CitationStyle::kNumeric) return m.end;
  size_t i = m.end;
  while (i < s.size() && s[i] != ']') ++i;
  return i < s.size() ? i + 1 : m.end;
}

}  // namespace

std::string_view DiscourseRoleName(DiscourseRole role) {
  switch (role) {
    case DiscourseRole::kTransition:
      return "Transition";
    case DiscourseRole::kSingleSummary:
      return "Single-Sum";
    case DiscourseRole::kNarrative:
      return "Narrative";
    case DiscourseRole::kReflection:
      return "Reflection";
    case DiscourseRole::kMultiSummary:
      return "Multi-Sum";
  }
  return "Transition";
}

std::optional<DiscourseRole> ParseDiscourseRole(std::string_view name) {
  for (auto role : kRoles) {
    if (DiscourseRoleName(role) == name) return role;
  }
  return std::nullopt;
}

std::string_view CitationUsageName(CitationUsage usage) {
  return usage == CitationUsage::kDominant ? "dominant" : "reference";
}

std::optional<CitationUsage> ParseCitationUsage(std::string_view name) {
  const std::string lower = Lower(name);
  if (lower == "dominant" || lower == "d") return CitationUsage::kDominant;
  if (lower == "reference" || lower == "r") return CitationUsage::kReference;
  return std::nullopt;
}

StyleDistribution ComputeStyleDistribution(std::span<const StyleLabel> labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "style distribution needs at least one label");
  }
  StyleDistribution dist;
  dist.sentences = labels.size();
  std::array<size_t, kRoles.size()> role_counts{};
  size_t dominant = 0;
  for (const auto& label : labels) {
    ++role_counts[static_cast<size_t>(label.role)];
    for (auto usage : label.citation_types) {
      ++dist.citations;
      if (usage == CitationUsage::kDominant) ++dominant;
    }
  }
  for (size_t i = 0; i < kRoles.size(); ++i) {
    if (role_counts[i] == 0) continue;
    dist.role_percent.emplace_back(
        kRoles[i], 100.0 * static_cast<double>(role_counts[i]) / static_cast<double>(labels.size()));
  }
  if (dist.citations > 0) {
    dist.dominant_percent =
        100.0 * static_cast<double>(dominant) / static_cast<double>(dist.citations);
    dist.reference_percent = 100.0 - dist.dominant_percent;
  }
  return dist;
}

std::vector<CitationUsage> ClassifyCitationUsageHeuristic(
    std::string_view sentence, std::span<const ingest::CitationMention> mentions) {
  std::vector<CitationUsage> out;
  out.reserve(mentions.size());
  const size_t first_semicolon = sentence.find(';');
  for (const auto& m : mentions) {
    const size_t start = MarkerStart(sentence, m);
    bool dominant = !InsideParentheses(sentence, start) &&
                    (first_semicolon == std::string_view::npos || start < first_semicolon) &&
                    Prepositions().count(WordBefore(sentence, start)) == 0;
    if (dominant) {
      auto words = WordsAfter(sentence, MarkerEnd(sentence, m), 3);
      size_t w = 0;
      while (w < words.size() && Adverbs().count(words[w]) > 0) ++w;
      dominant = w < words.size() && LooksLikeVerb(words[w]);
    }
    out.push_back(dominant ? CitationUsage::kDominant : CitationUsage::kReference);
  }
  return out;
}

}  // namespace litreview::metrics
