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

#include "litreview/prompt/generation.h"

#include <algorithm>
#include <tuple>

#include "litreview/digest.h"
#include "litreview/error.h"
#include "litreview/llm/tokens.h"

namespace litreview::prompt {
namespace {

std::string Field(std::string_view label, std::string_view value) {
  std::string out(label);
  out += ':';
  if (!value.empty()) {
    out += ' ';
    out += value;
  }
  return out;
}

std::string TaicLines(const ingest::TaicBundle& taic) {
  return Field("Title", taic.title) + "\n" + Field("Abstract", taic.abstract) + "\n" +
         Field("Introduction", taic.introduction) + "\n" + Field("Conclusion", taic.conclusion);
}

struct Rendered {
  std::string text;
  std::vector<FeatureDigest> digests;
};

Rendered RenderHeader(const VariantSpec& v, const ingest::TaicBundle& taic,
                      const std::string& target_id, const std::optional<std::string>& main_idea,
                      const GenerationOptions& options) {
  Rendered r;
  std::string& t = r.text;
  if (v.use_taic) {
    const std::string taic_text = TaicLines(taic);
    t += "We have finished writing the title, abstract, introduction and conclusion section of "
         "our " +
         options.field_of_study + " paper as follows:\n";
    t += taic_text + "\n";
    t += "However, the related work section is still missing.\n";
    r.digests.push_back({FeatureKind::kTaic, target_id, Sha256Hex(taic_text)});
  } else {
    t += "The related work section of our " + options.field_of_study +
         " paper is still missing.\n";
  }
  if (v.use_main_idea) {
    t += "Write our related work section that concisely cites the following papers in a natural "
         "way using all of the main ideas as the main story.\n";
  } else {
    t += "Write our related work section that concisely cites the following papers in a natural "
         "way.\n";
  }
  if (v.use_taic) {
    t += "Keep it short, e.g. 3 paragraphs at most. Make sure the related work section does not "
         "conflict with the sections already written.\n";
  } else {
    t += "Keep it short, e.g. 3 paragraphs at most.\n";
  }
  if (v.use_main_idea) {
    t += "You can freely reorder the cited papers to adapt to the main ideas.";
  } else {
    t += "You can freely reorder the cited papers.";
  }
  if (v.use_usage) {
    t += "\nPay extra attention to <Usage> which indicates how each work is cited by other work.";
  }
  if (v.use_main_idea) {
    if (!main_idea || main_idea->empty()) {
      throw Error(ErrorCode::kNotFound, "paper '" + target_id + "' has no main_idea feature");
    }
    t += "\n\nMain idea of our related work section:\n" + *main_idea;
    r.digests.push_back({FeatureKind::kMainIdea, target_id, Sha256Hex(*main_idea)});
  }
  t += "\n\nList of cited papers:\n";
  return r;
}

Rendered RenderPaperBlock(const VariantSpec& v, const graph::CitationNetwork& net,
                          const std::string& id, int number, const CtsLines* cts) {
  const graph::NetworkNode& node = net.Node(id);
  Rendered r;
  std::string& t = r.text;
  t += std::to_string(number) + ". " + node.ref.Long() + "\n";
  const graph::NodeFeature feature = graph::NodeFeatureOf(node, v.node_mode);
  t += feature.text;
  r.digests.push_back({v.node_mode == NodeMode::kFaceted ? FeatureKind::kFacetedSummary
                                                         : FeatureKind::kCitedAbstract,
                       id, Sha256Hex(feature.text)});
  if (v.use_usage) {
    auto it = net.usages.find(id);
    if (it == net.usages.end()) {
      throw Error(ErrorCode::kNotFound, "paper '" + id + "' has no usage feature");
    }
    t += "\n<Usage> " + it->second.summary;
    r.digests.push_back({FeatureKind::kUsage, id, Sha256Hex(it->second.summary)});
  }
  if (v.use_relationship) {
    const auto incoming = net.IncomingEdges(id);
    if (incoming.empty()) {
      throw Error(ErrorCode::kNotFound, "paper '" + id + "' has no relationship feature");
    }
    std::string relations;
    for (const auto* e : incoming) relations += "\n" + e->relation_text;
    t += "\nHow other papers cite it:" + relations;
    r.digests.push_back({FeatureKind::kRelationship, id, Sha256Hex(relations)});
  }
  if (v.use_cts && cts != nullptr) {
    auto it = cts->find(id);
    if (it != cts->end() && !it->second.empty()) {
      std::string lines;
      for (const auto& line : it->second) {
        lines += "\n";
        if (!line.heading.empty()) lines += "[" + line.heading + "] ";
        lines += line.sentence;
      }
      t += "\n\nPotentially useful sentences from this paper:" + lines;
      r.digests.push_back({FeatureKind::kCts, id, Sha256Hex(lines)});
    }
  }
  return r;
}

}  // namespace

std::set<FeatureKind> PromptBundle::DigestKinds() const {
  std::set<FeatureKind> kinds;
  for (const auto& d : digests) kinds.insert(d.kind);
  return kinds;
}

std::vector<std::string> ChronologicalOrder(const graph::CitationNetwork& network,
                                            std::vector<std::string> ids) {
  auto key = [&](const std::string& id) {
    const auto& ref = network.Node(id).ref;
    return std::make_tuple(!ref.year.has_value(), ref.year.value_or(0), ref.author, id);
  };
  std::stable_sort(ids.begin(), ids.end(),
                   [&](const std::string& a, const std::string& b) { return key(a) < key(b); });
  return ids;
}

PromptBundle RenderGenerationPrompt(const VariantSpec& variant, const ingest::TaicBundle& taic,
                                    const std::string& target_id, const GenerationUnit& unit,
                                    const graph::CitationNetwork& network, const CtsLines* cts,
                                    const GenerationOptions& options) {
  if (unit.cited_ids.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "generation unit has no cited papers");
  }
  Rendered header = RenderHeader(variant, taic, target_id, unit.main_idea, options);
  PromptBundle bundle;
  bundle.variant_id = variant.variant_id;
  bundle.unit_index = unit.unit_index;
  bundle.user = std::move(header.text);
  bundle.digests = std::move(header.digests);
  int number = 1;
  for (const auto& id : ChronologicalOrder(network, unit.cited_ids)) {
    Rendered block = RenderPaperBlock(variant, network, id, number, cts);
    if (number > 1) bundle.user += "\n\n";
    bundle.user += block.text;
    bundle.digests.insert(bundle.digests.end(), block.digests.begin(), block.digests.end());
    ++number;
  }
  std::sort(bundle.digests.begin(), bundle.digests.end());
  bundle.estimated_tokens = llm::EstimateTokens(bundle.user);
  if (options.token_budget > 0 && bundle.estimated_tokens > options.token_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "generation prompt for unit " + std::to_string(unit.unit_index) + " needs " +
                    std::to_string(bundle.estimated_tokens) + " tokens, budget is " +
                    std::to_string(options.token_budget) + "; re-chunk the cited papers");
  }
  return bundle;
}

int EstimateGenerationOverhead(const VariantSpec& variant, const ingest::TaicBundle& taic,
                               const std::optional<std::string>& main_idea,
                               const GenerationOptions& options) {
  return llm::EstimateTokens(RenderHeader(variant, taic, "", main_idea, options).text);
}

int EstimatePaperBlock(const VariantSpec& variant, const graph::CitationNetwork& network,
                       const std::string& paper_id, const CtsLines* cts) {
  // Two separator bytes plus room for a wider list number.
  return llm::EstimateTokens(RenderPaperBlock(variant, network, paper_id, 100, cts).text + "\n\n");
}

nlohmann::json BundleToJson(const PromptBundle& bundle) {
  nlohmann::json digests = nlohmann::json::array();
  for (const auto& d : bundle.digests) {
    digests.push_back({{"kind", FeatureKindName(d.kind)}, {"paper_id", d.paper_id},
                       {"sha256", d.sha256}});
  }
  return {{"variant_id", bundle.variant_id},
          {"unit_index", bundle.unit_index},
          {"estimated_tokens", bundle.estimated_tokens},
          {"prompt_sha256", Sha256Hex(bundle.user)},
          {"digests", digests}};
}

}  // namespace litreview::prompt
