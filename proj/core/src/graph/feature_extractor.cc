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

#include "litreview/graph/feature_extractor.h"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "litreview/digest.h"
#include "litreview/error.h"
#include "litreview/llm/tokens.h"
#include "litreview/prompt/templates.h"

namespace litreview::graph {
namespace {

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

FeatureExtractor::FeatureExtractor(std::shared_ptr<llm::LlmClient> client,
                                   std::shared_ptr<FeatureCache> cache)
    : client_(std::move(client)), cache_(std::move(cache)) {
  if (!client_) throw Error(ErrorCode::kInvalidArgument, "feature extractor needs a client");
}

CachedFeature FeatureExtractor::Complete(const std::string& operation, const std::string& prompt,
                                         const Parser& parse) {
  const FeatureCacheKey key{client_->profile().template_version, operation, Sha256Hex(prompt),
                            client_->profile().model_id};
  auto produce = [&]() -> CachedFeature {
    llm::ChatResponse response;
    try {
      response = client_->Complete(client_->MakeRequest(prompt), operation);
    } catch (const Error& e) {
      throw Error(e.code(), std::string(e.what()) + " (cache key " + key.Digest() + ")",
                  key.Digest());
    }
    nlohmann::json value = parse(response.content);
    return CachedFeature{response.content, std::move(value), false};
  };
  if (!cache_) return produce();
  return cache_->Memoize(key, produce);
}

FacetedSummary FeatureExtractor::DeriveFacetedSummary(const ingest::PaperRecord& record) {
  const CachedFeature f =
      Complete("faceted_summary", prompt::RenderFacetedPrompt(record),
               [](const std::string& completion) -> nlohmann::json {
                 return ParseFacetedOutput(completion);
               });
  return f.value.get<FacetedSummary>();
}

EdgeRelation FeatureExtractor::DeriveEdgeRelation(const NetworkNode& a, const NetworkNode& b,
                                                  std::vector<ingest::CitationSpan> spans) {
  if (spans.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no citation spans for " + a.paper_id + " -> " + b.paper_id);
  }
  for (const auto& span : spans) {
    if (span.host_paper_id != a.paper_id || span.bib_id != spans.front().bib_id) {
      throw Error(ErrorCode::kPrecondition, "citation span from " + span.host_paper_id +
                                                " does not belong to pair " + a.paper_id +
                                                " -> " + b.paper_id);
    }
  }
  if (!a.faceted || !b.faceted) {
    throw Error(ErrorCode::kPrecondition,
                "relationship " + a.paper_id + " -> " + b.paper_id + " needs both faceted summaries");
  }
  std::stable_sort(spans.begin(), spans.end(),
                   [](const auto& x, const auto& y) { return x.position < y.position; });
  auto render = [&](size_t count) {
    std::vector<std::string> texts;
    for (size_t i = 0; i < count; ++i) texts.push_back(spans[i].Text());
    return prompt::RenderRelationPrompt(a.ref, *a.faceted, b.ref, *b.faceted,
                                        spans.front().marker, texts);
  };
  std::string text = render(spans.size());
  if (spans.size() > kMaxRelationSpans &&
      llm::EstimateTokens(text) > client_->profile().input_token_budget) {
    spans.resize(kMaxRelationSpans);
    text = render(spans.size());
  }
  const CachedFeature f = Complete("relationship", text, [](const std::string& completion) {
    std::string relation = Trim(completion);
    if (relation.empty()) {
      throw Error(ErrorCode::kParse, "empty relationship completion", completion);
    }
    return nlohmann::json(relation);
  });
  EdgeRelation edge;
  edge.from_id = a.paper_id;
  edge.to_id = b.paper_id;
  edge.relation_text = f.value.get<std::string>();
  edge.marker = spans.front().marker;
  edge.supporting_spans = std::move(spans);
  return edge;
}

EnrichedUsage FeatureExtractor::DeriveEnrichedUsage(const NetworkNode& b,
                                                    std::span<const EdgeRelation> incident) {
  if (incident.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no citing papers for " + b.paper_id);
  }
  for (const auto& edge : incident) {
    if (edge.to_id != b.paper_id) {
      throw Error(ErrorCode::kPrecondition,
                  "edge " + edge.from_id + " -> " + edge.to_id + " does not point at " + b.paper_id);
    }
  }
  // Over budget, fragments per citing paper shrink to 3 and then to 1.
  std::string text;
  for (size_t cap : {SIZE_MAX, size_t{3}, size_t{1}}) {
    std::vector<prompt::UsageGroup> groups;
    for (const auto& edge : incident) {
      prompt::UsageGroup g{edge.from_id, edge.relation_text, {}};
      for (size_t i = 0; i < edge.supporting_spans.size() && i < cap; ++i) {
        g.fragments.push_back(edge.supporting_spans[i].Text());
      }
      groups.push_back(std::move(g));
    }
    text = prompt::RenderUsagePrompt(b.ref, std::move(groups));
    if (llm::EstimateTokens(text) <= client_->profile().input_token_budget) break;
  }
  const std::string id = b.paper_id;
  const CachedFeature f = Complete("usage", text, [&id](const std::string& completion) {
    return nlohmann::json(ParseEnrichedUsage(completion, id));
  });
  return f.value.get<EnrichedUsage>();
}

std::string FeatureExtractor::DeriveMainIdea(const ingest::PaperRecord& target,
                                             const FacetedSummary& summary,
                                             std::string_view gold_related_work) {
  const std::string text =
      prompt::RenderMainIdeaPrompt(target.title, summary, gold_related_work);
  const CachedFeature f = Complete("main_idea", text, [](const std::string& completion) {
    std::string idea = Trim(completion);
    if (idea.empty()) throw Error(ErrorCode::kParse, "empty main-idea completion", completion);
    return nlohmann::json(idea);
  });
  return f.value.get<std::string>();
}

}  // namespace litreview::graph
