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

#include "litreview/graph/faceted_summary.h"

#include <array>
#include <cctype>
#include <optional>
#include <sstream>

#include "litreview/error.h"

namespace litreview::graph {
namespace {

enum Facet { kObjective, kMethod, kFindings, kContribution, kKeywords, kFacetCount };

constexpr std::array<std::string_view, kFacetCount> kCanonicalLabels = {
    "Objective", "Method", "Findings", "Contribution", "Keywords"};

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Recognizes "Label:" at the start of a line (markdown bold and list bullets
// tolerated). Returns the facet and the value after the colon.
std::optional<std::pair<Facet, std::string>> MatchLabel(std::string_view line) {
  std::string t = Trim(line);
  std::string_view v = t;
  while (!v.empty() && (v.front() == '-' || v.front() == '*' || v.front() == ' ')) {
    v.remove_prefix(1);
  }
  const size_t colon = v.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  std::string label = Lower(v.substr(0, colon));
  while (!label.empty() && (label.back() == '*' || label.back() == ' ')) label.pop_back();
  std::string rest(v.substr(colon + 1));
  while (!rest.empty() && rest.front() == '*') rest.erase(rest.begin());
  static const std::array<std::pair<std::string_view, Facet>, 8> kLabels = {{
      {"objective", kObjective},
      {"objectives", kObjective},
      {"method", kMethod},
      {"methods", kMethod},
      {"findings", kFindings},
      {"contribution", kContribution},
      {"contributions", kContribution},
      {"keywords", kKeywords},
  }};
  for (const auto& [name, facet] : kLabels) {
    if (label == name) return std::make_pair(facet, Trim(rest));
  }
  return std::nullopt;
}

std::vector<std::string> SplitKeywords(std::string value) {
  value = Trim(value);
  if (!value.empty() && value.back() == '.') value.pop_back();
  const char sep = value.find(';') == std::string::npos && value.find(',') != std::string::npos
                       ? ','
                       : ';';
  std::vector<std::string> out;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, sep)) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

std::string RenderFacetedBlock(const FacetedSummary& s) {
  std::string keywords;
  for (const auto& k : s.keywords) {
    if (!keywords.empty()) keywords += "; ";
    keywords += k;
  }
  return "Objective: " + s.objective + "\nMethod: " + s.method + "\nFindings: " + s.findings +
         "\nContribution: " + s.contribution + "\nKeywords: " + keywords;
}

FacetedSummary ParseFacetedOutput(std::string_view completion) {
  std::array<std::optional<std::string>, kFacetCount> values;
  std::optional<Facet> current;
  std::istringstream in{std::string(completion)};
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    if (auto m = MatchLabel(line)) {
      current = m->first;
      auto& slot = values[m->first];
      if (!slot) {
        slot = m->second;
      } else if (!m->second.empty()) {
        *slot += (slot->empty() ? "" : "\n") + m->second;
      }
    } else if (current) {
      auto& slot = values[*current];
      *slot += (slot->empty() ? "" : "\n") + Trim(line);
    }
  }
  std::string missing;
  for (int f = 0; f < kFacetCount; ++f) {
    if (!values[f] || values[f]->empty()) {
      if (!missing.empty()) missing += ", ";
      missing += kCanonicalLabels[f];
    }
  }
  FacetedSummary s;
  if (missing.empty()) {
    s.keywords = SplitKeywords(*values[kKeywords]);
    if (s.keywords.empty()) missing = "Keywords";
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kParse, "faceted summary is missing: " + missing,
                std::string(completion));
  }
  s.objective = *values[kObjective];
  s.method = *values[kMethod];
  s.findings = *values[kFindings];
  s.contribution = *values[kContribution];
  return s;
}

void to_json(nlohmann::json& j, const FacetedSummary& s) {
  j = {{"objective", s.objective},
       {"method", s.method},
       {"findings", s.findings},
       {"contribution", s.contribution},
       {"keywords", s.keywords}};
}

void from_json(const nlohmann::json& j, FacetedSummary& s) {
  j.at("objective").get_to(s.objective);
  j.at("method").get_to(s.method);
  j.at("findings").get_to(s.findings);
  j.at("contribution").get_to(s.contribution);
  j.at("keywords").get_to(s.keywords);
}

}  // namespace litreview::graph
