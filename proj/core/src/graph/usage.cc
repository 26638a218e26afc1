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

#include "litreview/graph/usage.h"

#include <array>
#include <cctype>

#include "litreview/error.h"

namespace litreview::graph {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool IsWordChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

size_t FindWord(std::string_view haystack, std::string_view word) {
  size_t pos = haystack.find(word);
  while (pos != std::string_view::npos) {
    const bool left = pos == 0 || !IsWordChar(haystack[pos - 1]);
    const size_t end = pos + word.size();
    const bool right = end >= haystack.size() || !IsWordChar(haystack[end]);
    if (left && right) return pos;
    pos = haystack.find(word, pos + 1);
  }
  return std::string_view::npos;
}

std::string StripEdgePunctuation(std::string s) {
  s = Trim(s);
  while (!s.empty() && (s.back() == '.' || s.back() == ',' || s.back() == ';')) s.pop_back();
  return Trim(s);
}

}  // namespace

metrics::CitationUsage ClassifyUsage(std::string_view completion, bool* fallback) {
  const std::string lower = Lower(completion);
  const size_t dominant = FindWord(lower, "dominant");
  const size_t reference = FindWord(lower, "reference");
  if (dominant != std::string::npos || reference != std::string::npos) {
    if (fallback) *fallback = false;
    return dominant < reference ? metrics::CitationUsage::kDominant
                                : metrics::CitationUsage::kReference;
  }
  if (fallback) *fallback = true;
  static const std::array<std::string_view, 6> kReferencePhrases = {
      "as a tool", "as a baseline", "for reference", "as a resource", "as a dataset",
      "as background"};
  for (std::string_view phrase : kReferencePhrases) {
    if (lower.find(phrase) != std::string::npos) return metrics::CitationUsage::kReference;
  }
  return metrics::CitationUsage::kDominant;
}

EnrichedUsage ParseEnrichedUsage(std::string_view completion, std::string paper_id) {
  const std::string lower = Lower(completion);
  const size_t known = lower.find("known for ");
  const size_t cited = known == std::string::npos ? std::string::npos
                                                  : lower.find("it is cited ", known);
  if (known == std::string::npos || cited == std::string::npos) {
    throw Error(ErrorCode::kParse,
                "usage summary does not follow 'is known for X and it is cited for Y'",
                std::string(completion));
  }
  std::string known_for(completion.substr(known + 10, cited - known - 10));
  known_for = Trim(known_for);
  if (Lower(known_for).ends_with(" and")) known_for.resize(known_for.size() - 4);
  known_for = StripEdgePunctuation(known_for);

  std::string cited_for(completion.substr(cited + 12));
  const std::string cited_lower = Lower(cited_for);
  if (cited_lower.starts_with("for ")) {
    cited_for.erase(0, 4);
  } else if (cited_lower.starts_with("as ")) {
    cited_for.erase(0, 3);
  }
  cited_for = StripEdgePunctuation(cited_for);
  if (known_for.empty() || cited_for.empty()) {
    throw Error(ErrorCode::kParse, "usage summary has an empty 'known for' or 'cited for' part",
                std::string(completion));
  }
  EnrichedUsage usage;
  usage.paper_id = std::move(paper_id);
  usage.known_for = std::move(known_for);
  usage.cited_for = std::move(cited_for);
  usage.summary = Trim(completion);
  usage.usage_class = ClassifyUsage(completion, &usage.class_from_fallback);
  return usage;
}

void to_json(nlohmann::json& j, const EnrichedUsage& u) {
  j = {{"paper_id", u.paper_id},
       {"known_for", u.known_for},
       {"cited_for", u.cited_for},
       {"usage_class", metrics::CitationUsageName(u.usage_class)},
       {"summary", u.summary},
       {"class_from_fallback", u.class_from_fallback}};
}

void from_json(const nlohmann::json& j, EnrichedUsage& u) {
  j.at("paper_id").get_to(u.paper_id);
  j.at("known_for").get_to(u.known_for);
  j.at("cited_for").get_to(u.cited_for);
  j.at("summary").get_to(u.summary);
  u.class_from_fallback = j.value("class_from_fallback", false);
  auto usage = metrics::ParseCitationUsage(j.at("usage_class").get<std::string>());
  if (!usage) throw Error(ErrorCode::kParse, "unknown usage_class in cached usage");
  u.usage_class = *usage;
}

}  // namespace litreview::graph
