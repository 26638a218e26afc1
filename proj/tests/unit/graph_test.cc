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


#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "litreview/digest.h"
#include "litreview/error.h"
#include "litreview/graph/faceted_summary.h"
#include "litreview/graph/feature_cache.h"
#include "litreview/graph/feature_extractor.h"
#include "litreview/graph/network.h"
#include "litreview/graph/usage.h"
#include "litreview/llm/tokens.h"
#include "litreview/prompt/templates.h"
#include "support/test_support.h"

namespace litreview::graph {
namespace {

namespace fs = std::filesystem;
namespace lt = litreview::testing;

// Remote client whose transport answers each prompt with `answer(prompt)`.
struct CannedBackend {
  std::vector<std::string> prompts;
  std::shared_ptr<llm::LlmClient> client;
};

std::shared_ptr<CannedBackend> Canned(std::function<std::string(const std::string&)> answer,
                                      int budget = 8000) {
  auto backend = std::make_shared<CannedBackend>();
  auto* raw = backend.get();
  auto transport = std::make_shared<llm::FunctionTransport>(
      [raw, answer](const llm::HttpRequest& req) -> llm::HttpResponse {
        const auto body = nlohmann::json::parse(req.body);
        const std::string prompt = body["messages"].back()["content"];
        raw->prompts.push_back(prompt);
        nlohmann::json out = {
            {"choices", {{{"message", {{"content", answer(prompt)}}}, {"finish_reason", "stop"}}}}};
        return {200, out.dump()};
      });
  llm::BackendProfile p;
  p.kind = llm::BackendKind::kRemote;
  p.model_id = "canned";
  p.endpoint = "http://canned.invalid/v1";
  p.input_token_budget = budget;
  llm::ClientOptions o;
  o.transport = transport;
  o.sleeper = [](std::chrono::milliseconds) {};
  backend->client = std::make_shared<llm::LlmClient>(p, o);
  return backend;
}

const char* kCanonicalBlock =
    "Objective: Study X.\nMethod: Use Y.\nFindings: Z works.\nContribution: A tool.\n"
    "Keywords: a; b; c.";

TEST(ParseFacetedOutput, CanonicalBlock) {
  const auto s = ParseFacetedOutput(kCanonicalBlock);
  EXPECT_EQ(s.objective, "Study X.");
  EXPECT_EQ(s.method, "Use Y.");
  EXPECT_EQ(s.findings, "Z works.");
  EXPECT_EQ(s.contribution, "A tool.");
  EXPECT_EQ(s.keywords, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(ParseFacetedOutput, ReorderedLabelsAndLooseWhitespace) {
  const auto s = ParseFacetedOutput(
      "\n  keywords:  x ;y\n\nFINDINGS: f\n- Objective:  o \nContributions: c\nMethod: m\n");
  EXPECT_EQ(s.objective, "o");
  EXPECT_EQ(s.method, "m");
  EXPECT_EQ(s.findings, "f");
  EXPECT_EQ(s.contribution, "c");
  EXPECT_EQ(s.keywords, (std::vector<std::string>{"x", "y"}));
}

TEST(ParseFacetedOutput, MissingLabelsAreListed) {
  try {
    ParseFacetedOutput("Objective: o\nMethod: m\nContribution: c");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("Findings"), std::string::npos) << msg;
    EXPECT_NE(msg.find("Keywords"), std::string::npos) << msg;
    EXPECT_EQ(e.detail(), "Objective: o\nMethod: m\nContribution: c");
  }
}

TEST(ParseFacetedOutput, RenderThenParseIsIdentity) {
  std::mt19937_64 rng(43);
  auto phrase = [&] {
    std::string s;
    const int words = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < words; ++i) {
      if (i) s += ' ';
      for (int k = 0; k < 1 + static_cast<int>(rng() % 7); ++k) s += static_cast<char>('a' + rng() % 26);
    }
    return s;
  };
  for (int i = 0; i < 200; ++i) {
    FacetedSummary s{phrase() + ".", phrase(), phrase(), phrase() + ".", {}};
    for (int k = 0; k < 1 + static_cast<int>(rng() % 4); ++k) s.keywords.push_back(phrase());
    ASSERT_EQ(ParseFacetedOutput(RenderFacetedBlock(s)), s);
  }
}

TEST(FacetedSummary, JsonRoundTrip) {
  const auto s = ParseFacetedOutput(kCanonicalBlock);
  EXPECT_EQ(nlohmann::json(s).get<FacetedSummary>(), s);
}

TEST(ParseEnrichedUsage, CanonicalShape) {
  const auto u = ParseEnrichedUsage(
      "B et al. 2020 is known for X and it is cited for methodology comparison", "b");
  EXPECT_EQ(u.paper_id, "b");
  EXPECT_EQ(u.known_for, "X");
  EXPECT_EQ(u.cited_for, "methodology comparison");
  EXPECT_EQ(u.usage_class, metrics::CitationUsage::kDominant);
  EXPECT_TRUE(u.class_from_fallback);
}

TEST(ParseEnrichedUsage, ReferenceKeywordDecidesClass) {
  const auto u = ParseEnrichedUsage(
      "B et al. 2020 is known for a parser and it is cited as a reference for the tool", "b");
  EXPECT_EQ(u.usage_class, metrics::CitationUsage::kReference);
  EXPECT_FALSE(u.class_from_fallback);
}

TEST(ParseEnrichedUsage, UnparseableCompletionCarriesRawText) {
  try {
    ParseEnrichedUsage("no idea", "b");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_EQ(e.detail(), "no idea");
  }
}

TEST(ClassifyUsage, KeywordFallback) {
  bool fallback = false;
  EXPECT_EQ(ClassifyUsage("it is cited as a baseline", &fallback),
            metrics::CitationUsage::kReference);
  EXPECT_TRUE(fallback);
  EXPECT_EQ(ClassifyUsage("it is cited for its core idea", &fallback),
            metrics::CitationUsage::kDominant);
  EXPECT_EQ(ClassifyUsage("mostly a dominant citation, sometimes reference", &fallback),
            metrics::CitationUsage::kDominant);
  EXPECT_FALSE(fallback);
}

class FeatureCacheTest : public ::testing::Test {
 protected:
  lt::TempDir dir_;
  FeatureCacheKey key_{"v1", "faceted_summary", "abc", "model-a"};
  int calls_ = 0;
  FeatureCache::Producer producer_ = [this] {
    ++calls_;
    return CachedFeature{"raw", nlohmann::json{{"n", calls_}}, false};
  };
};

TEST_F(FeatureCacheTest, MissThenHit) {
  FeatureCache cache(dir_.path());
  EXPECT_FALSE(cache.Memoize(key_, producer_).hit);
  const auto second = cache.Memoize(key_, producer_);
  EXPECT_TRUE(second.hit);
  EXPECT_EQ(second.value["n"], 1);
  EXPECT_EQ(second.raw_completion, "raw");
  EXPECT_EQ(calls_, 1);
  EXPECT_EQ(cache.hits(), 1u);
  EXPECT_EQ(cache.misses(), 1u);
  const auto stored = nlohmann::json::parse(lt::ReadFile(cache.PathFor(key_)));
  EXPECT_EQ(stored["model_id"], "model-a");
  EXPECT_TRUE(stored.contains("timestamp"));
  EXPECT_EQ(cache.PathFor(key_).parent_path().filename(), "faceted_summary");
}

TEST_F(FeatureCacheTest, ModelIdIsPartOfTheKey) {
  FeatureCache cache(dir_.path());
  cache.Memoize(key_, producer_);
  auto other = key_;
  other.model_id = "model-b";
  cache.Memoize(other, producer_);
  EXPECT_EQ(calls_, 2);
  EXPECT_NE(key_.Digest(), other.Digest());
}

TEST_F(FeatureCacheTest, CorruptEntryIsAMissAndGetsRewritten) {
  FeatureCache cache(dir_.path());
  cache.Memoize(key_, producer_);
  lt::WriteFile(cache.PathFor(key_), "{ truncated");
  FeatureCache reopened(dir_.path());
  EXPECT_FALSE(reopened.Memoize(key_, producer_).hit);
  EXPECT_EQ(calls_, 2);
  EXPECT_EQ(reopened.warnings().size(), 1u);
  EXPECT_NO_THROW(nlohmann::json::parse(lt::ReadFile(reopened.PathFor(key_))));
  EXPECT_TRUE(reopened.Memoize(key_, producer_).hit);
}

TEST_F(FeatureCacheTest, PersistsAcrossInstancesWithoutTempFiles) {
  {
    FeatureCache cache(dir_.path());
    cache.Memoize(key_, producer_);
  }
  FeatureCache again(dir_.path());
  EXPECT_TRUE(again.Memoize(key_, producer_).hit);
  for (const auto& e : fs::recursive_directory_iterator(dir_.path())) {
    EXPECT_EQ(e.path().string().find(".tmp"), std::string::npos) << e.path();
  }
}

TEST(FeatureExtractor, FacetedSummaryHappyPathAndCache) {
  lt::TempDir dir;
  auto backend = Canned([](const std::string&) { return std::string(kCanonicalBlock); });
  FeatureExtractor extractor(backend->client, std::make_shared<FeatureCache>(dir.path()));
  const auto corpus = lt::FixtureCorpus();
  const auto first = extractor.DeriveFacetedSummary(corpus.cited[0]);
  EXPECT_EQ(first.method, "Use Y.");
  EXPECT_EQ(backend->prompts.size(), 1u);
  EXPECT_EQ(backend->prompts[0], prompt::RenderFacetedPrompt(corpus.cited[0]));
  EXPECT_EQ(extractor.DeriveFacetedSummary(corpus.cited[0]), first);
  EXPECT_EQ(backend->prompts.size(), 1u);  // served from cache
}

TEST(FeatureExtractor, MalformedFacetedOutputIsAParseError) {
  auto backend = Canned([](const std::string&) {
    return std::string("Objective: o\nMethod: m\nContribution: c\nKeywords: k");
  });
  FeatureExtractor extractor(backend->client, nullptr);
  try {
    extractor.DeriveFacetedSummary(lt::FixtureCorpus().cited[0]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(e.detail().find("Objective: o"), std::string::npos);
  }
}

TEST(FeatureExtractor, BackendFailureCarriesTheCacheKey) {
  auto transport = std::make_shared<llm::FunctionTransport>(
      [](const llm::HttpRequest&) -> llm::HttpResponse { return {500, "down"}; });
  llm::BackendProfile p;
  p.kind = llm::BackendKind::kRemote;
  p.model_id = "m";
  p.retry.max_attempts = 2;
  llm::ClientOptions o;
  o.transport = transport;
  o.sleeper = [](std::chrono::milliseconds) {};
  FeatureExtractor extractor(std::make_shared<llm::LlmClient>(p, o), nullptr);
  const auto record = lt::FixtureCorpus().cited[0];
  const FeatureCacheKey key{"v1", "faceted_summary",
                            Sha256Hex(prompt::RenderFacetedPrompt(record)), "m"};
  try {
    extractor.DeriveFacetedSummary(record);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBackend);
    EXPECT_EQ(e.detail(), key.Digest());
    EXPECT_NE(std::string(e.what()).find(key.Digest()), std::string::npos);
  }
}

NetworkNode Node(const std::string& id, const std::string& author, int year) {
  NetworkNode n;
  n.paper_id = id;
  n.ref = {"Title of " + id, author, year};
  n.faceted = ParseFacetedOutput(kCanonicalBlock);
  return n;
}

ingest::CitationSpan Span(const std::string& host, std::size_t position, std::string text) {
  return {"b1", {std::move(text)}, host, position, "B et al. (2020)"};
}

TEST(FeatureExtractor, EdgeRelationStoresCompletionVerbatim) {
  auto backend = Canned([](const std::string&) { return std::string("A cites B as a baseline"); });
  FeatureExtractor extractor(backend->client, nullptr);
  const auto edge = extractor.DeriveEdgeRelation(Node("a", "Ay", 2021), Node("b", "Bee", 2020),
                                                 {Span("a", 3, "We follow B et al. (2020).")});
  EXPECT_EQ(edge.from_id, "a");
  EXPECT_EQ(edge.to_id, "b");
  EXPECT_EQ(edge.relation_text, "A cites B as a baseline");
  EXPECT_EQ(edge.marker, "B et al. (2020)");
  EXPECT_NE(backend->prompts[0].find("(which is cited as B et al. (2020)):"), std::string::npos);
}

TEST(FeatureExtractor, TwelveSpansOverBudgetKeepFirstEightByPosition) {
  const auto a = Node("a", "Ay", 2021);
  const auto b = Node("b", "Bee", 2020);
  std::vector<ingest::CitationSpan> spans;
  for (int i = 11; i >= 0; --i) {
    spans.push_back(Span("a", static_cast<std::size_t>(i * 10),
                         "Span number " + std::to_string(i) + " " + std::string(300, 'w') + "."));
  }
  std::vector<std::string> first_eight;
  for (int i = 0; i < 8; ++i) first_eight.push_back(spans[11 - i].Text());
  const std::string eight =
      prompt::RenderRelationPrompt(a.ref, *a.faceted, b.ref, *b.faceted, "B et al. (2020)",
                                   first_eight);
  auto backend = Canned([](const std::string&) { return std::string("rel"); },
                        llm::EstimateTokens(eight));
  FeatureExtractor extractor(backend->client, nullptr);
  const auto edge = extractor.DeriveEdgeRelation(a, b, spans);
  ASSERT_EQ(backend->prompts.size(), 1u);
  EXPECT_EQ(backend->prompts[0], eight);
  ASSERT_EQ(edge.supporting_spans.size(), 8u);
  EXPECT_EQ(edge.supporting_spans.front().position, 0u);
  EXPECT_EQ(edge.supporting_spans.back().position, 70u);
}

TEST(FeatureExtractor, SpansForAnotherPairAreRejected) {
  auto backend = Canned([](const std::string&) { return std::string("rel"); });
  FeatureExtractor extractor(backend->client, nullptr);
  try {
    extractor.DeriveEdgeRelation(Node("a", "Ay", 2021), Node("b", "Bee", 2020),
                                 {Span("someone-else", 0, "x")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
  EXPECT_THROW(extractor.DeriveEdgeRelation(Node("a", "Ay", 2021), Node("b", "Bee", 2020), {}),
               Error);
  EXPECT_TRUE(backend->prompts.empty());
}

TEST(FeatureExtractor, EnrichedUsageGroupsIncidentEdges) {
  auto backend = Canned([](const std::string&) {
    return std::string("Bee et al. 2020 is known for parsing and it is cited as a baseline");
  });
  FeatureExtractor extractor(backend->client, nullptr);
  std::vector<EdgeRelation> incident = {
      {"z", "b", "Z builds on B.", "[1]", {Span("z", 0, "Fragment from z.")}},
      {"a", "b", "A compares with B.", "B (2020)", {Span("a", 0, "Fragment from a.")}}};
  const auto u = extractor.DeriveEnrichedUsage(Node("b", "Bee", 2020), incident);
  EXPECT_EQ(u.known_for, "parsing");
  EXPECT_EQ(u.usage_class, metrics::CitationUsage::kReference);
  const std::string& p = backend->prompts.at(0);
  EXPECT_LT(p.find("A compares with B."), p.find("Z builds on B."));
  EXPECT_THROW(extractor.DeriveEnrichedUsage(Node("b", "Bee", 2020), {}), Error);
  incident[0].to_id = "other";
  EXPECT_THROW(extractor.DeriveEnrichedUsage(Node("b", "Bee", 2020), incident), Error);
}

ingest::PaperRecord Record(const std::string& id, const std::string& author, int year,
                           const std::string& body, std::vector<ingest::BibEntry> bib) {
  ingest::PaperRecord r;
  r.paper_id = id;
  r.title = "Title " + id;
  r.abstract = "Abstract of " + id + ".";
  r.year = year;
  r.authors = {"Ann " + author};
  r.sections = {{"1 Introduction", body, 0}, {"9 Conclusion", "Done.", 1}};
  r.bibliography = std::move(bib);
  return r;
}

FeatureExtractor SyntheticExtractor() {
  return FeatureExtractor(lt::SyntheticClient("gpt-3.5-turbo"), nullptr);
}

TEST(BuildNetwork, TargetWithTwoCitedAndNoCrossCitations) {
  const auto b1 = Record("b1", "Berg", 2019, "Nothing cited.", {});
  const auto b2 = Record("b2", "Cruz", 2020, "Nothing cited.", {});
  const auto t = Record("t", "Tan", 2023, "Berg et al. (2019) and Cruz et al. (2020) matter.",
                        {{"x1", "Title b1", "Berg", 2019}, {"x2", "Title b2", "Cruz", 2020}});
  auto extractor = SyntheticExtractor();
  const auto net = BuildNetwork(t, std::vector{b1, b2}, {}, extractor);
  EXPECT_EQ(net.nodes.size(), 3u);
  EXPECT_EQ(net.edges.size(), 2u);
  EXPECT_EQ(net.usages.size(), 2u);
  EXPECT_EQ(net.Node("t").role, NodeRole::kTarget);
}

TEST(BuildNetwork, CrossCitationAddsEdgeAndUsageAggregatesBoth) {
  const auto b1 = Record("b1", "Berg", 2019, "Nothing cited.", {});
  const auto b2 = Record("b2", "Cruz", 2020, "We extend Berg et al. (2019).",
                         {{"r1", "Title b1", "Berg", 2019}});
  const auto t = Record("t", "Tan", 2023, "Berg et al. (2019) and Cruz et al. (2020) matter.",
                        {{"x1", "Title b1", "Berg", 2019}, {"x2", "Title b2", "Cruz", 2020}});
  auto extractor = SyntheticExtractor();
  const auto net = BuildNetwork(t, std::vector{b1, b2}, {}, extractor);
  EXPECT_EQ(net.edges.size(), 3u);
  EXPECT_EQ(net.IncomingEdges("b1").size(), 2u);
  EXPECT_EQ(net.IncomingEdges("b1")[0]->from_id, "b2");
  EXPECT_EQ(net.usages.count("b1"), 1u);
}

TEST(BuildNetwork, EmptyCitedListIsAnError) {
  auto extractor = SyntheticExtractor();
  const auto t = Record("t", "Tan", 2023, "x", {});
  EXPECT_THROW(BuildNetwork(t, std::vector<ingest::PaperRecord>{}, {}, extractor), Error);
}

TEST(BuildNetwork, FixtureNetworkShape) {
  const auto& net = lt::SharedFixtureWorld().network;
  EXPECT_EQ(net.nodes.size(), 11u);  // target, 6 cited, 1 extra, 3 degraded
  EXPECT_EQ(net.edges.size(), 13u);
  EXPECT_TRUE(net.Node("missing:hansen2017").degraded);
  EXPECT_EQ(net.Node("missing:hansen2017").role, NodeRole::kMissing);
  EXPECT_FALSE(net.Node("missing:hansen2017").faceted.has_value());
  for (const auto& e : net.edges) {
    EXPECT_EQ(net.nodes.count(e.from_id), 1u);
    EXPECT_EQ(net.nodes.count(e.to_id), 1u);
    EXPECT_NE(e.from_id, e.to_id);
    EXPECT_FALSE(e.relation_text.empty());
    EXPECT_FALSE(net.Node(e.to_id).degraded);
  }
  for (const auto& id : net.cited_ids) {
    if (!net.IncomingEdges(id).empty()) EXPECT_EQ(net.usages.count(id), 1u) << id;
  }
  for (const auto& [id, usage] : net.usages) {
    EXPECT_EQ(net.Node(id).role, NodeRole::kCited);
  }
  // Numeric markers from a cited paper still resolve to in-network papers.
  bool numeric_edge = false;
  for (const auto& e : net.edges) numeric_edge |= (e.from_id == "dubois2021" && e.marker == "[1]");
  EXPECT_TRUE(numeric_edge);
}

TEST(BuildNetwork, DeterministicAndSerializable) {
  const auto corpus = lt::FixtureCorpus();
  auto e1 = SyntheticExtractor();
  auto e2 = SyntheticExtractor();
  const auto n1 = BuildNetwork(corpus.target, corpus.cited, corpus.extra_citing, e1, {1});
  const auto n2 = BuildNetwork(corpus.target, corpus.cited, corpus.extra_citing, e2, {8});
  EXPECT_EQ(NetworkToJson(n1).dump(), NetworkToJson(n2).dump());
  EXPECT_EQ(NetworkToJson(NetworkFromJson(NetworkToJson(n1))).dump(), NetworkToJson(n1).dump());
}

TEST(BuildNetwork, SecondBuildIsServedFromCache) {
  lt::TempDir dir;
  const auto corpus = lt::FixtureCorpus();
  auto log = std::make_shared<llm::CallLog>();
  auto cache = std::make_shared<FeatureCache>(dir.path());
  FeatureExtractor extractor(lt::SyntheticClient("gpt-3.5-turbo", log), cache);
  BuildNetwork(corpus.target, corpus.cited, corpus.extra_citing, extractor);
  const auto calls = log->size();
  EXPECT_GT(calls, 0u);
  BuildNetwork(corpus.target, corpus.cited, corpus.extra_citing, extractor);
  EXPECT_EQ(log->size(), calls);
  EXPECT_EQ(cache->hits(), calls);
}

TEST(NodeFeatureOf, ModesAndMissingFeature) {
  const auto& net = lt::SharedFixtureWorld().network;
  const auto& chen = net.Node("chen2020");
  EXPECT_EQ(NodeFeatureOf(chen, prompt::NodeMode::kAbstract).text, chen.abstract);
  EXPECT_EQ(NodeFeatureOf(chen, prompt::NodeMode::kFaceted).text,
            RenderFacetedBlock(*chen.faceted));
  EXPECT_THROW(NodeFeatureOf(net.Node("missing:ito2019"), prompt::NodeMode::kFaceted), Error);
}

TEST(BibEntryMatches, TitleOrSurnameAndYear) {
  const auto r = Record("b1", "Berg", 2019, "x", {});
  EXPECT_TRUE(BibEntryMatches({"k", "TITLE  b1!", "Nobody", 1900}, r));
  EXPECT_TRUE(BibEntryMatches({"k", "Other", "berg", 2019}, r));
  EXPECT_FALSE(BibEntryMatches({"k", "Other", "Berg", 2018}, r));
  EXPECT_EQ(NormalizeTitle("  A  Study: of X! "), "a study of x");
}

}  // namespace
}  // namespace litreview::graph
