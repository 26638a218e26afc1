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

#include "litreview/pipeline/manifest.h"

#include <algorithm>
#include <tuple>

namespace litreview::pipeline {

const VariantRecord* RunManifest::Variant(std::string_view id) const {
  for (const auto& v : variants) {
    if (v.variant_id == id) return &v;
  }
  return nullptr;
}

nlohmann::json ManifestToJson(const RunManifest& m) {
  std::vector<llm::CallRecord> calls = m.calls;
  std::stable_sort(calls.begin(), calls.end(), [](const auto& a, const auto& b) {
    return std::tie(a.label, a.request_digest) < std::tie(b.label, b.request_digest);
  });
  nlohmann::json call_json = nlohmann::json::array();
  nlohmann::json latencies = nlohmann::json::array();
  long long input_tokens = 0;
  for (const auto& c : calls) {
    call_json.push_back(llm::CallRecordToJson(c));
    latencies.push_back({{"request_digest", c.request_digest}, {"latency_ms", c.latency_ms}});
    input_tokens += c.input_tokens;
  }
  nlohmann::json variants = nlohmann::json::array();
  for (const auto& v : m.variants) {
    nlohmann::json units = nlohmann::json::array();
    for (const auto& u : v.units) {
      units.push_back({{"unit_index", u.unit_index},
                       {"label", u.label},
                       {"cited_ids", u.cited_ids},
                       {"estimated_tokens", u.estimated_tokens},
                       {"generation_passes", u.generation_passes},
                       {"paragraphs", u.paragraphs},
                       {"bundles", u.bundles}});
    }
    nlohmann::json j = {{"variant_id", v.variant_id},
                        {"status", v.ok ? "ok" : "error"},
                        {"chunk_method", v.chunk_method},
                        {"units", units},
                        {"warnings", v.warnings}};
    if (!v.ok) j["error"] = v.error;
    variants.push_back(std::move(j));
  }
  nlohmann::json timings = nlohmann::json::array();
  for (const auto& [stage, ms] : m.stage_timings_ms) {
    timings.push_back({{"stage", stage}, {"ms", ms}});
  }
  return {{"config_digest", m.config_digest},
          {"seed", m.seed},
          {"template_versions", m.template_versions},
          {"main_idea_source", m.main_idea_source},
          {"calls", call_json},
          {"call_count", calls.size()},
          {"input_tokens_total", input_tokens},
          {"cache", {{"hits", m.cache_hits}, {"misses", m.cache_misses}}},
          {"variants", variants},
          {"output_digests", m.output_digests},
          {"warnings", m.warnings},
          {"volatile",
           {{"started_at", m.started_at}, {"stage_timings", timings}, {"call_latency", latencies}}}};
}

nlohmann::json StripVolatile(nlohmann::json manifest) {
  manifest.erase("volatile");
  return manifest;
}

}  // namespace litreview::pipeline
