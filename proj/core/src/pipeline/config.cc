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

#include "litreview/pipeline/config.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "litreview/cts/retrieval.h"
#include "litreview/error.h"
#include "litreview/prompt/variant.h"

namespace litreview::pipeline {
namespace {

namespace fs = std::filesystem;

fs::path Resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

std::vector<fs::path> PathList(const nlohmann::json& j, const char* key, const fs::path& base) {
  std::vector<fs::path> out;
  if (!j.contains(key)) return out;
  const auto& v = j.at(key);
  if (v.is_string()) {
    out.push_back(Resolve(base, v.get<std::string>()));
  } else {
    for (const auto& item : v) out.push_back(Resolve(base, item.get<std::string>()));
  }
  return out;
}

llm::BackendProfile Profile(const nlohmann::json& j, const char* key, const char* default_model,
                            const fs::path& base) {
  nlohmann::json p = j.value(key, nlohmann::json::object());
  if (!p.contains("model_id")) p["model_id"] = default_model;
  llm::BackendProfile profile = llm::ProfileFromJson(p);
  if (profile.kind == llm::BackendKind::kScripted) {
    if (profile.endpoint.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(key) + ": scripted profile needs a script path");
    }
    profile.endpoint = Resolve(base, profile.endpoint).string();
  }
  return profile;
}

}  // namespace

RunConfig RunConfigFromJson(const nlohmann::json& j, const fs::path& base_dir) {
  RunConfig c;
  try {
    c.source = j;
    if (!j.contains("target")) throw Error(ErrorCode::kInvalidArgument, "config needs 'target'");
    c.target = Resolve(base_dir, j.at("target").get<std::string>());
    c.cited = PathList(j, "cited", base_dir);
    c.extra_citing = PathList(j, "extra_citing", base_dir);
    c.variants = j.value("variants", prompt::AllVariantIds());
    c.extraction_profile = Profile(j, "extraction_profile", "gpt-3.5-turbo", base_dir);
    c.generation_profile = Profile(j, "generation_profile", "gpt-4", base_dir);
    c.token_budget = j.value("token_budget", c.token_budget);
    c.generation_profile.input_token_budget = c.token_budget;
    c.k_cap = j.value("k_cap", c.k_cap);
    if (j.contains("plan_file")) c.plan_file = Resolve(base_dir, j.at("plan_file"));
    if (j.contains("gold_file")) c.gold_file = Resolve(base_dir, j.at("gold_file"));
    c.out_dir = Resolve(base_dir, j.value("out_dir", std::string("run")));
    c.seed = j.value("seed", c.seed);
    c.max_in_flight = j.value("max_in_flight", c.max_in_flight);
    c.field_of_study = j.value("field_of_study", c.field_of_study);
    c.exclude_related_work_from_cts =
        j.value("exclude_related_work_from_cts", c.exclude_related_work_from_cts);
    if (j.contains("template_version")) {
      const std::string v = j.at("template_version");
      c.extraction_profile.template_version = v;
      c.generation_profile.template_version = v;
    }
    for (const auto& corr : j.value("correlations", nlohmann::json::array())) {
      c.correlations.push_back({corr.value("name", std::string("tau")),
                                corr.at("x").get<std::vector<double>>(),
                                corr.at("y").get<std::vector<double>>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed config: ") + e.what());
  }
  for (const auto& v : c.variants) prompt::VariantFeatures(v);
  return c;
}

RunConfig LoadRunConfig(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, "malformed config " + path.string() + ": " + e.what());
  }
  return RunConfigFromJson(j, fs::absolute(path).parent_path());
}

void ValidateRunConfig(const RunConfig& c) {
  if (c.variants.empty()) throw Error(ErrorCode::kInvalidArgument, "no variants requested");
  if (c.token_budget <= 0) throw Error(ErrorCode::kInvalidArgument, "token_budget must be > 0");
  if (c.k_cap < 1 || c.k_cap > cts::kMaxK) {
    throw Error(ErrorCode::kInvalidArgument,
                "k_cap must be between 1 and " + std::to_string(cts::kMaxK));
  }
  if (c.cited.empty()) throw Error(ErrorCode::kInvalidArgument, "no cited papers configured");
  if (c.max_in_flight < 1) throw Error(ErrorCode::kInvalidArgument, "max_in_flight must be >= 1");
  const bool needs_idea = std::any_of(c.variants.begin(), c.variants.end(), [](const auto& v) {
    return prompt::VariantFeatures(v).use_main_idea;
  });
  if (needs_idea && !c.plan_file && !c.gold_file) {
    throw Error(ErrorCode::kInvalidArgument,
                "variants with main ideas need a plan_file or a gold_file");
  }
}

std::vector<fs::path> ExpandRecordPaths(const std::vector<fs::path>& paths) {
  std::vector<fs::path> out;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace litreview::pipeline
