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

#include "litreview/graph/network.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "litreview/error.h"
#include "litreview/graph/feature_extractor.h"
#include "litreview/parallel.h"

namespace litreview::graph {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

constexpr std::string_view kMissingPrefix = "missing:";

struct PendingEdge {
  const ingest::PaperRecord* from;
  const ingest::PaperRecord* to;
  std::vector<ingest::CitationSpan> spans;
};

}  // namespace

std::string_view NodeRoleName(NodeRole role) {
  switch (role) {
    case NodeRole::kTarget:
      return "target";
    case NodeRole::kCited:
      return "cited";
    case NodeRole::kExtraCiting:
      return "extra_citing";
    case NodeRole::kMissing:
      return "missing";
  }
  return "unknown";
}

const NetworkNode& CitationNetwork::Node(std::string_view paper_id) const {
  auto it = nodes.find(std::string(paper_id));
  if (it == nodes.end()) {
    throw Error(ErrorCode::kNotFound, "paper '" + std::string(paper_id) + "' is not in the network");
  }
  return it->second;
}

std::vector<const EdgeRelation*> CitationNetwork::IncomingEdges(std::string_view paper_id) const {
  std::vector<const EdgeRelation*> out;
  for (const auto& e : edges) {
    if (e.to_id == paper_id) out.push_back(&e);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EdgeRelation* a, const EdgeRelation* b) { return a->from_id < b->from_id; });
  return out;
}

NodeFeature NodeFeatureOf(const NetworkNode& node, prompt::NodeMode mode) {
  NodeFeature f{node.paper_id, mode, ""};
  if (mode == prompt::NodeMode::kFaceted) {
    if (!node.faceted) {
      throw Error(ErrorCode::kNotFound,
                  "paper '" + node.paper_id + "' has no faceted_summary feature");
    }
    f.text = RenderFacetedBlock(*node.faceted);
  } else {
    if (node.abstract.empty()) {
      throw Error(ErrorCode::kNotFound,
                  "paper '" + node.paper_id + "' has no cited_abstract feature");
    }
    f.text = node.abstract;
  }
  return f;
}

std::string NormalizeTitle(std::string_view title) {
  std::string out;
  bool pending_space = false;
  for (char c : title) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u) || u >= 0x80) {
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      out += static_cast<char>(std::tolower(u));
    } else {
      pending_space = true;
    }
  }
  return out;
}

bool BibEntryMatches(const ingest::BibEntry& entry, const ingest::PaperRecord& record) {
  const std::string title = NormalizeTitle(entry.title);
  if (!title.empty() && title == NormalizeTitle(record.title)) return true;
  const std::string last = Lower(entry.first_author_last_name);
  return !last.empty() && entry.year && record.year && *entry.year == *record.year &&
         last == Lower(record.FirstAuthorLastName());
}

CitationNetwork BuildNetwork(const ingest::PaperRecord& target,
                             std::span<const ingest::PaperRecord> cited,
                             std::span<const ingest::PaperRecord> extra_citing,
                             FeatureExtractor& extractor, const NetworkOptions& options) {
  if (cited.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot build a citation network without cited papers");
  }
  CitationNetwork net;
  net.target_id = target.paper_id;

  std::vector<const ingest::PaperRecord*> records = {&target};
  for (const auto& r : cited) records.push_back(&r);
  for (const auto& r : extra_citing) records.push_back(&r);
  for (size_t i = 0; i < records.size(); ++i) {
    const auto* r = records[i];
    NetworkNode node;
    node.paper_id = r->paper_id;
    node.ref = prompt::RefOf(*r);
    node.abstract = r->abstract;
    node.role = i == 0 ? NodeRole::kTarget
                       : (i <= cited.size() ? NodeRole::kCited : NodeRole::kExtraCiting);
    if (node.role == NodeRole::kCited) net.cited_ids.push_back(r->paper_id);
    if (!net.nodes.emplace(r->paper_id, std::move(node)).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate paper id '" + r->paper_id + "' in corpus");
    }
  }

  // Pairs (A, B) where A's bibliography names B and A's body cites it.
  std::vector<PendingEdge> pending;
  for (const auto* a : records) {
    for (const auto& entry : a->bibliography) {
      const ingest::PaperRecord* match = nullptr;
      for (const auto* b : records) {
        if (b != a && BibEntryMatches(entry, *b)) {
          match = b;
          break;
        }
      }
      if (match == nullptr) {
        if (a == &target && !ingest::ExtractCitationSpans(target, entry.bib_id).empty()) {
          NetworkNode missing;
          missing.paper_id = std::string(kMissingPrefix) + entry.bib_id;
          missing.ref = prompt::PaperRef{entry.title, entry.first_author_last_name, entry.year};
          missing.role = NodeRole::kMissing;
          missing.degraded = true;
          net.nodes.emplace(missing.paper_id, std::move(missing));
        }
        continue;
      }
      auto spans = ingest::ExtractCitationSpans(*a, entry.bib_id);
      if (spans.empty()) continue;
      auto dup = std::find_if(pending.begin(), pending.end(), [&](const PendingEdge& e) {
        return e.from == a && e.to == match;
      });
      if (dup != pending.end()) {
        dup->spans.insert(dup->spans.end(), spans.begin(), spans.end());
      } else {
        pending.push_back({a, match, std::move(spans)});
      }
    }
  }
  std::sort(pending.begin(), pending.end(), [](const PendingEdge& x, const PendingEdge& y) {
    return std::tie(x.from->paper_id, x.to->paper_id) < std::tie(y.from->paper_id, y.to->paper_id);
  });

  std::vector<std::optional<FacetedSummary>> summaries(records.size());
  ParallelFor(records.size(), options.max_in_flight, [&](size_t i) {
    summaries[i] = extractor.DeriveFacetedSummary(*records[i]);
  });
  for (size_t i = 0; i < records.size(); ++i) {
    net.nodes.at(records[i]->paper_id).faceted = std::move(summaries[i]);
  }

  net.edges.resize(pending.size());
  ParallelFor(pending.size(), options.max_in_flight, [&](size_t i) {
    const auto& p = pending[i];
    net.edges[i] = extractor.DeriveEdgeRelation(net.nodes.at(p.from->paper_id),
                                                net.nodes.at(p.to->paper_id), p.spans);
  });

  std::vector<std::string> with_usage;
  for (const auto& id : net.cited_ids) {
    if (!net.IncomingEdges(id).empty()) with_usage.push_back(id);
  }
  std::vector<EnrichedUsage> usages(with_usage.size());
  ParallelFor(with_usage.size(), options.max_in_flight, [&](size_t i) {
    std::vector<EdgeRelation> incident;
    for (const auto* e : net.IncomingEdges(with_usage[i])) incident.push_back(*e);
    usages[i] = extractor.DeriveEnrichedUsage(net.nodes.at(with_usage[i]), incident);
  });
  for (size_t i = 0; i < with_usage.size(); ++i) {
    net.usages.emplace(with_usage[i], std::move(usages[i]));
  }
  return net;
}

nlohmann::json NetworkToJson(const CitationNetwork& net) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& [id, node] : net.nodes) {
    nlohmann::json n = {{"paper_id", id},
                        {"title", node.ref.title},
                        {"first_author", node.ref.author},
                        {"year", node.ref.year ? nlohmann::json(*node.ref.year) : nlohmann::json()},
                        {"role", NodeRoleName(node.role)},
                        {"degraded", node.degraded},
                        {"abstract", node.abstract}};
    n["faceted_summary"] = node.faceted ? nlohmann::json(*node.faceted) : nlohmann::json();
    nodes.push_back(std::move(n));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : net.edges) {
    edges.push_back({{"from_id", e.from_id},
                     {"to_id", e.to_id},
                     {"relation_text", e.relation_text},
                     {"marker", e.marker},
                     {"supporting_spans", e.supporting_spans}});
  }
  nlohmann::json usages = nlohmann::json::object();
  for (const auto& [id, u] : net.usages) usages[id] = u;
  return {{"target_id", net.target_id},
          {"cited_ids", net.cited_ids},
          {"nodes", nodes},
          {"edges", edges},
          {"usages", usages}};
}

CitationNetwork NetworkFromJson(const nlohmann::json& j) {
  CitationNetwork net;
  try {
    j.at("target_id").get_to(net.target_id);
    j.at("cited_ids").get_to(net.cited_ids);
    for (const auto& n : j.at("nodes")) {
      NetworkNode node;
      n.at("paper_id").get_to(node.paper_id);
      n.at("title").get_to(node.ref.title);
      n.at("first_author").get_to(node.ref.author);
      if (!n.at("year").is_null()) node.ref.year = n.at("year").get<int>();
      const std::string role = n.at("role").get<std::string>();
      for (NodeRole r : {NodeRole::kTarget, NodeRole::kCited, NodeRole::kExtraCiting,
                         NodeRole::kMissing}) {
        if (NodeRoleName(r) == role) node.role = r;
      }
      n.at("degraded").get_to(node.degraded);
      n.at("abstract").get_to(node.abstract);
      if (!n.at("faceted_summary").is_null()) {
        node.faceted = n.at("faceted_summary").get<FacetedSummary>();
      }
      net.nodes.emplace(node.paper_id, std::move(node));
    }
    for (const auto& e : j.at("edges")) {
      EdgeRelation edge;
      e.at("from_id").get_to(edge.from_id);
      e.at("to_id").get_to(edge.to_id);
      e.at("relation_text").get_to(edge.relation_text);
      e.at("marker").get_to(edge.marker);
      e.at("supporting_spans").get_to(edge.supporting_spans);
      net.edges.push_back(std::move(edge));
    }
    for (const auto& [id, u] : j.at("usages").items()) net.usages.emplace(id, u.get<EnrichedUsage>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed network: ") + e.what());
  }
  return net;
}

}  // namespace litreview::graph
