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

#include "litreview/prompt/chunking.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "litreview/error.h"
#include "litreview/ingest/citation_markers.h"

namespace litreview::prompt {
namespace {

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool IsHeading(std::string_view line) { return line.starts_with("# "); }

// Greedy order-preserving packing of items[first, last).
std::vector<std::vector<const ChunkItem*>> Pack(std::span<const ChunkItem* const> items,
                                                int capacity) {
  std::vector<std::vector<const ChunkItem*>> out;
  int used = 0;
  for (const ChunkItem* item : items) {
    if (out.empty() || used + item->tokens > capacity) {
      out.emplace_back();
      used = 0;
    }
    out.back().push_back(item);
    used += item->tokens;
  }
  return out;
}

GenerationUnit MakeUnit(const std::vector<const ChunkItem*>& items, std::string label,
                        int overhead) {
  GenerationUnit unit;
  unit.label = std::move(label);
  unit.estimated_tokens = overhead;
  for (const ChunkItem* item : items) {
    unit.cited_ids.push_back(item->paper_id);
    unit.estimated_tokens += item->tokens;
  }
  return unit;
}

}  // namespace

std::string_view ChunkMethodName(ChunkMethod method) {
  switch (method) {
    case ChunkMethod::kSingle:
      return "single";
    case ChunkMethod::kGoldLayout:
      return "gold_layout";
    case ChunkMethod::kGreedy:
      return "greedy";
  }
  return "unknown";
}

ChunkPlan PlanChunks(std::span<const ChunkItem> cited,
                     const std::optional<std::vector<LayoutGroup>>& gold_layout, int budget,
                     int fixed_overhead) {
  if (cited.empty()) throw Error(ErrorCode::kInvalidArgument, "no cited papers to plan");
  if (budget <= fixed_overhead) {
    throw Error(ErrorCode::kInvalidArgument,
                "token budget " + std::to_string(budget) + " does not exceed the fixed prompt cost " +
                    std::to_string(fixed_overhead));
  }
  const int capacity = budget - fixed_overhead;
  std::map<std::string, const ChunkItem*> by_id;
  int total = 0;
  for (const auto& item : cited) {
    if (!by_id.emplace(item.paper_id, &item).second) {
      throw Error(ErrorCode::kInvalidArgument, "paper '" + item.paper_id + "' listed twice");
    }
    if (item.tokens > capacity) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "paper '" + item.paper_id + "' needs " + std::to_string(item.tokens) +
                      " tokens on its own, more than the " + std::to_string(capacity) +
                      " left in the budget",
                  item.paper_id);
    }
    total += item.tokens;
  }

  ChunkPlan plan;
  std::vector<std::vector<const ChunkItem*>> groups;
  std::vector<std::string> labels;
  if (total <= capacity) {
    plan.method = ChunkMethod::kSingle;
    groups.emplace_back();
    for (const auto& item : cited) groups.back().push_back(&item);
    labels.push_back("unit-1");
  } else if (gold_layout && !gold_layout->empty()) {
    plan.method = ChunkMethod::kGoldLayout;
    std::set<std::string> seen;
    for (const auto& group : *gold_layout) {
      std::vector<const ChunkItem*> members;
      for (const auto& id : group.cited_ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) {
          throw Error(ErrorCode::kInvalidArgument, "layout group '" + group.label +
                                                       "' names unknown paper '" + id + "'");
        }
        if (!seen.insert(id).second) {
          throw Error(ErrorCode::kInvalidArgument, "paper '" + id + "' appears in two layout groups");
        }
        members.push_back(it->second);
      }
      // Keep the input order inside a group.
      std::stable_sort(members.begin(), members.end(),
                       [](const ChunkItem* a, const ChunkItem* b) { return a < b; });
      auto packed = Pack(members, capacity);
      if (packed.size() > 1) {
        plan.warnings.push_back("layout group '" + group.label + "' exceeds the budget; split into " +
                                std::to_string(packed.size()) + " units");
      }
      for (size_t i = 0; i < packed.size(); ++i) {
        groups.push_back(std::move(packed[i]));
        labels.push_back(packed.size() == 1 ? group.label
                                            : group.label + " (" + std::to_string(i + 1) + ")");
      }
    }
    if (seen.size() != by_id.size()) {
      throw Error(ErrorCode::kInvalidArgument, "layout does not cover every cited paper");
    }
  } else {
    plan.method = ChunkMethod::kGreedy;
    std::vector<const ChunkItem*> all;
    for (const auto& item : cited) all.push_back(&item);
    groups = Pack(all, capacity);
    for (size_t i = 0; i < groups.size(); ++i) labels.push_back("unit-" + std::to_string(i + 1));
  }
  for (size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].empty()) continue;
    GenerationUnit unit = MakeUnit(groups[i], labels[i], fixed_overhead);
    unit.unit_index = static_cast<int>(plan.units.size());
    plan.units.push_back(std::move(unit));
  }
  return plan;
}

std::string RelatedWorkBody(std::string_view related_work) {
  std::istringstream in{std::string(related_work)};
  std::string line, out;
  bool first = true;
  while (std::getline(in, line)) {
    if (IsHeading(line)) continue;
    if (!first) out += '\n';
    out += line;
    first = false;
  }
  // Collapse the blank-line runs left behind by removed headings.
  std::string collapsed;
  size_t newlines = 0;
  for (char c : Trim(out)) {
    newlines = c == '\n' ? newlines + 1 : 0;
    if (newlines <= 2) collapsed += c;
  }
  return collapsed;
}

std::vector<LayoutGroup> LayoutFromRelatedWork(std::string_view related_work,
                                               std::span<const ingest::BibEntry> cited) {
  std::vector<LayoutGroup> groups;
  std::istringstream in{std::string(related_work)};
  std::string line;
  const bool has_headings = related_work.starts_with("# ") ||
                            related_work.find("\n# ") != std::string_view::npos;
  std::vector<std::pair<std::string, std::string>> sections;  // label, text
  if (has_headings) {
    while (std::getline(in, line)) {
      if (IsHeading(line)) {
        sections.emplace_back(Trim(line.substr(2)), "");
      } else {
        if (sections.empty()) sections.emplace_back("preamble", "");
        sections.back().second += line + "\n";
      }
    }
  } else {
    std::string para;
    auto flush = [&] {
      if (!Trim(para).empty()) {
        sections.emplace_back("paragraph-" + std::to_string(sections.size() + 1), para);
      }
      para.clear();
    };
    while (std::getline(in, line)) {
      if (Trim(line).empty()) {
        flush();
      } else {
        para += line + "\n";
      }
    }
    flush();
  }
  std::set<std::string> assigned;
  for (const auto& [label, text] : sections) {
    LayoutGroup group{label, {}};
    for (const auto& m : ingest::DetectCitationMentions(text, cited)) {
      if (m.resolved() && assigned.insert(m.bib_id).second) group.cited_ids.push_back(m.bib_id);
    }
    groups.push_back(std::move(group));
  }
  if (groups.empty()) groups.push_back({"paragraph-1", {}});
  for (const auto& entry : cited) {
    if (!assigned.count(entry.bib_id)) groups.back().cited_ids.push_back(entry.bib_id);
  }
  std::erase_if(groups, [](const LayoutGroup& g) { return g.cited_ids.empty(); });
  return groups;
}

}  // namespace litreview::prompt
