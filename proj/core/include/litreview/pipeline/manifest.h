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

#ifndef LITREVIEW_PIPELINE_MANIFEST_H_
#define LITREVIEW_PIPELINE_MANIFEST_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "litreview/llm/call_log.h"

namespace litreview::pipeline {

struct UnitRecord {
  int unit_index = 0;
  std::string label;
  std::vector<std::string> cited_ids;
  int estimated_tokens = 0;
  int generation_passes = 0;
  int paragraphs = 0;
  std::vector<nlohmann::json> bundles;  // one per generation pass
};

struct VariantRecord {
  std::string variant_id;
  bool ok = false;
  std::string error;
  std::string chunk_method;
  std::vector<UnitRecord> units;
  std::vector<std::string> warnings;
};

struct RunManifest {
  std::string config_digest;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> template_versions;  // by profile role
  std::string main_idea_source;
  std::vector<llm::CallRecord> calls;
  std::size_t cache_hits = 0;
  std::size_t cache_misses = 0;
  std::vector<VariantRecord> variants;
  std::map<std::string, std::string> output_digests;  // relative path -> sha256
  std::vector<std::string> warnings;
  // Wall-clock data, kept apart from the reproducible fields.
  std::vector<std::pair<std::string, double>> stage_timings_ms;
  std::string started_at;

  const VariantRecord* Variant(std::string_view id) const;
};

// Reproducible fields at the top level; timings, call latencies and the
// start time under "volatile". Calls are ordered by (label, digest).
nlohmann::json ManifestToJson(const RunManifest& manifest);

// `manifest` without its "volatile" member.
nlohmann::json StripVolatile(nlohmann::json manifest);

}  // namespace litreview::pipeline

#endif  // LITREVIEW_PIPELINE_MANIFEST_H_
