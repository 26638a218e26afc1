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

#ifndef LITREVIEW_GRAPH_FEATURE_EXTRACTOR_H_
#define LITREVIEW_GRAPH_FEATURE_EXTRACTOR_H_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "litreview/graph/feature_cache.h"
#include "litreview/graph/network.h"
#include "litreview/llm/client.h"

namespace litreview::graph {

// Relation prompts over budget keep this many spans, earliest first.
inline constexpr std::size_t kMaxRelationSpans = 8;

// Cache-aware LLM feature derivation.
class FeatureExtractor {
 public:
  // `cache` may be null to disable memoization.
  FeatureExtractor(std::shared_ptr<llm::LlmClient> client, std::shared_ptr<FeatureCache> cache);

  using Parser = std::function<nlohmann::json(const std::string& completion)>;

  // Completes `prompt` through the cache. Backend errors carry the cache key
  // digest; parse errors carry the raw completion.
  CachedFeature Complete(const std::string& operation, const std::string& prompt,
                         const Parser& parse);

  FacetedSummary DeriveFacetedSummary(const ingest::PaperRecord& record);

  // `a` cites `b`. Spans must all be hosted by `a` and name one bib entry.
  EdgeRelation DeriveEdgeRelation(const NetworkNode& a, const NetworkNode& b,
                                  std::vector<ingest::CitationSpan> spans);

  // `incident` must be non-empty and all point at `b`.
  EnrichedUsage DeriveEnrichedUsage(const NetworkNode& b, std::span<const EdgeRelation> incident);

  std::string DeriveMainIdea(const ingest::PaperRecord& target, const FacetedSummary& summary,
                             std::string_view gold_related_work);

  const llm::LlmClient& client() const { return *client_; }
  const std::shared_ptr<FeatureCache>& cache() const { return cache_; }

 private:
  std::shared_ptr<llm::LlmClient> client_;
  std::shared_ptr<FeatureCache> cache_;
};

}  // namespace litreview::graph

#endif  // LITREVIEW_GRAPH_FEATURE_EXTRACTOR_H_
