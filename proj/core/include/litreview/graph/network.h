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

#ifndef LITREVIEW_GRAPH_NETWORK_H_
#define LITREVIEW_GRAPH_NETWORK_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "litreview/graph/faceted_summary.h"
#include "litreview/graph/usage.h"
#include "litreview/ingest/citation_spans.h"
#include "litreview/ingest/paper_record.h"
#include "litreview/prompt/templates.h"
#include "litreview/prompt/variant.h"

namespace litreview::graph {

class FeatureExtractor;

enum class NodeRole { kTarget, kCited, kExtraCiting, kMissing };

std::string_view NodeRoleName(NodeRole role);

struct NetworkNode {
  std::string paper_id;
  prompt::PaperRef ref;
  NodeRole role = NodeRole::kCited;
  // Missing papers only carry bibliography metadata.
  bool degraded = false;
  std::string abstract;
  std::optional<FacetedSummary> faceted;
};

// Directed: `from_id` cites `to_id`.
struct EdgeRelation {
  std::string from_id;
  std::string to_id;
  std::string relation_text;
  // How `from_id` refers to `to_id`, e.g. "[4]".
  std::string marker;
  std::vector<ingest::CitationSpan> supporting_spans;
};

// The text a generation prompt shows for a node.
struct NodeFeature {
  std::string paper_id;
  prompt::NodeMode mode = prompt::NodeMode::kFaceted;
  std::string text;
};

struct CitationNetwork {
  std::string target_id;
  std::map<std::string, NetworkNode> nodes;
  std::vector<EdgeRelation> edges;  // sorted by (from_id, to_id)
  std::map<std::string, EnrichedUsage> usages;
  std::vector<std::string> cited_ids;  // input order

  const NetworkNode& Node(std::string_view paper_id) const;
  // Edges into `paper_id`, by citing id.
  std::vector<const EdgeRelation*> IncomingEdges(std::string_view paper_id) const;
};

// Faceted block or abstract of a node. Throws Error{kNotFound} naming the
// paper and feature when the node lacks it.
NodeFeature NodeFeatureOf(const NetworkNode& node, prompt::NodeMode mode);

// True when `entry` names `record`: equal normalized titles, or equal first
// author last name (case-insensitive) and year.
bool BibEntryMatches(const ingest::BibEntry& entry, const ingest::PaperRecord& record);

// Lowercased alphanumeric words joined by single spaces.
std::string NormalizeTitle(std::string_view title);

struct NetworkOptions {
  int max_in_flight = 4;
};

// Nodes for target, cited and extra citing papers, plus degraded nodes for
// target bibliography entries that the target cites but no record covers.
// Edges for every in-network pair (A, B) where A's body cites B. Usages for
// cited papers with at least one incoming edge. Throws
// Error{kInvalidArgument} when `cited` is empty or paper ids collide.
CitationNetwork BuildNetwork(const ingest::PaperRecord& target,
                             std::span<const ingest::PaperRecord> cited,
                             std::span<const ingest::PaperRecord> extra_citing,
                             FeatureExtractor& extractor, const NetworkOptions& options = {});

nlohmann::json NetworkToJson(const CitationNetwork& network);
CitationNetwork NetworkFromJson(const nlohmann::json& j);

}  // namespace litreview::graph

#endif  // LITREVIEW_GRAPH_NETWORK_H_
