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

#include "litreview/prompt/plan_file.h"

#include <fstream>
#include <sstream>

#include "litreview/error.h"

namespace litreview::prompt {
namespace {

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

MainIdeaPlan ParsePlanFile(std::string_view text) {
  MainIdeaPlan plan;
  std::istringstream in{std::string(text)};
  std::string line;
  PlanEntry current;
  bool at_start = true;
  auto flush = [&] {
    current.text = Trim(current.text);
    if (!current.text.empty()) plan.entries.push_back(current);
    current = PlanEntry{};
    at_start = true;
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line) == "---") {
      flush();
      continue;
    }
    if (at_start && Trim(line).empty()) continue;
    if (at_start && line.starts_with("# ")) {
      current.label = Trim(line.substr(2));
      at_start = false;
      continue;
    }
    at_start = false;
    current.text += line + "\n";
  }
  flush();
  return plan;
}

MainIdeaPlan LoadPlanFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read plan file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParsePlanFile(buf.str());
}

std::vector<std::string> AssignMainIdeas(const MainIdeaPlan& plan,
                                         std::vector<GenerationUnit>& units) {
  if (plan.entries.empty()) {
    throw Error(ErrorCode::kPrecondition, "main-idea plan is empty");
  }
  std::vector<std::string> warnings;
  if (units.size() == 1) {
    std::string joined;
    for (const auto& e : plan.entries) joined += (joined.empty() ? "" : "\n\n") + e.text;
    units[0].main_idea = joined;
    return warnings;
  }
  for (size_t i = 0; i < units.size(); ++i) {
    if (i < plan.entries.size()) {
      units[i].main_idea = plan.entries[i].text;
    } else {
      units[i].main_idea = plan.entries.back().text;
      warnings.push_back("unit " + std::to_string(i) + " reuses the last main idea");
    }
  }
  if (plan.entries.size() > units.size()) {
    std::string& last = *units.back().main_idea;
    for (size_t i = units.size(); i < plan.entries.size(); ++i) {
      last += "\n\n" + plan.entries[i].text;
    }
    warnings.push_back(std::to_string(plan.entries.size() - units.size()) +
                       " extra main ideas appended to the last unit");
  }
  return warnings;
}

}  // namespace litreview::prompt
