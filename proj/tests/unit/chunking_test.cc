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


#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "litreview/error.h"
#include "litreview/prompt/chunking.h"
#include "support/test_support.h"

namespace litreview::prompt {
namespace {

namespace lt = litreview::testing;

std::vector<std::string> Ids(const GenerationUnit& u) { return u.cited_ids; }

std::vector<ChunkItem> Items(std::vector<int> tokens) {
  std::vector<ChunkItem> out;
  for (size_t i = 0; i < tokens.size(); ++i) out.push_back({"p" + std::to_string(i), tokens[i]});
  return out;
}

TEST(PlanChunks, EverythingFitsInOneUnit) {
  const auto items = Items({10, 20, 30});
  const auto plan = PlanChunks(items, std::nullopt, 100, 40);
  EXPECT_EQ(plan.method, ChunkMethod::kSingle);
  ASSERT_EQ(plan.units.size(), 1u);
  EXPECT_EQ(Ids(plan.units[0]), (std::vector<std::string>{"p0", "p1", "p2"}));
  EXPECT_EQ(plan.units[0].estimated_tokens, 100);
  EXPECT_EQ(plan.units[0].label, "unit-1");
}

TEST(PlanChunks, GreedyPackingPreservesOrder) {
  const auto items = Items({30, 30, 30, 50, 10});
  const auto plan = PlanChunks(items, std::nullopt, 80, 10);  // capacity 70
  EXPECT_EQ(plan.method, ChunkMethod::kGreedy);
  ASSERT_EQ(plan.units.size(), 3u);
  EXPECT_EQ(Ids(plan.units[0]), (std::vector<std::string>{"p0", "p1"}));
  EXPECT_EQ(Ids(plan.units[1]), (std::vector<std::string>{"p2"}));
  EXPECT_EQ(Ids(plan.units[2]), (std::vector<std::string>{"p3", "p4"}));
  for (size_t i = 0; i < plan.units.size(); ++i) {
    EXPECT_EQ(plan.units[i].unit_index, static_cast<int>(i));
    EXPECT_LE(plan.units[i].estimated_tokens, 80);
  }
}

TEST(PlanChunks, SixPapersSplitAfterTheFourth) {
  const auto items = Items({10, 10, 10, 10, 10, 10});
  const auto plan = PlanChunks(items, std::nullopt, 45, 5);  // room for four
  ASSERT_EQ(plan.units.size(), 2u);
  EXPECT_EQ(Ids(plan.units[0]), (std::vector<std::string>{"p0", "p1", "p2", "p3"}));
  EXPECT_EQ(Ids(plan.units[1]), (std::vector<std::string>{"p4", "p5"}));
}

TEST(PlanChunks, TwoLayoutGroupsGiveTwoUnitsInLayoutOrder) {
  const auto items = Items({30, 30, 30});
  const std::vector<LayoutGroup> layout = {{"Second half", {"p2"}}, {"First half", {"p0", "p1"}}};
  const auto plan = PlanChunks(items, layout, 70, 5);
  EXPECT_EQ(plan.method, ChunkMethod::kGoldLayout);
  ASSERT_EQ(plan.units.size(), 2u);
  EXPECT_EQ(plan.units[0].label, "Second half");
  EXPECT_EQ(Ids(plan.units[1]), (std::vector<std::string>{"p0", "p1"}));
  EXPECT_TRUE(plan.warnings.empty());
}

TEST(PlanChunks, RandomPlansPartitionTheInputWithinBudget) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> tokens(1 + rng() % 15);
    for (auto& t : tokens) t = 1 + static_cast<int>(rng() % 60);
    const auto items = Items(tokens);
    const int overhead = static_cast<int>(rng() % 20);
    const int budget = overhead + 60 + static_cast<int>(rng() % 100);
    const auto plan = PlanChunks(items, std::nullopt, budget, overhead);
    std::vector<std::string> flat;
    for (const auto& u : plan.units) {
      EXPECT_FALSE(u.cited_ids.empty());
      EXPECT_LE(u.estimated_tokens, budget);
      flat.insert(flat.end(), u.cited_ids.begin(), u.cited_ids.end());
    }
    std::vector<std::string> expected;
    for (const auto& i : items) expected.push_back(i.paper_id);
    ASSERT_EQ(flat, expected);
  }
}

TEST(PlanChunks, GoldLayoutGroupsAndSplitsOversizedGroups) {
  const auto items = Items({40, 40, 40, 10});
  const std::vector<LayoutGroup> layout = {{"Alpha", {"p3", "p0"}}, {"Beta", {"p1", "p2"}}};
  const auto plan = PlanChunks(items, layout, 60, 10);  // capacity 50
  EXPECT_EQ(plan.method, ChunkMethod::kGoldLayout);
  ASSERT_EQ(plan.units.size(), 3u);
  EXPECT_EQ(plan.units[0].label, "Alpha");
  EXPECT_EQ(Ids(plan.units[0]), (std::vector<std::string>{"p0", "p3"}));
  EXPECT_EQ(plan.units[1].label, "Beta (1)");
  EXPECT_EQ(plan.units[2].label, "Beta (2)");
  EXPECT_EQ(plan.warnings.size(), 1u);
}

TEST(PlanChunks, LayoutIsIgnoredWhenEverythingFits) {
  const auto items = Items({1, 1});
  const std::vector<LayoutGroup> layout = {{"Alpha", {"p0"}}, {"Beta", {"p1"}}};
  EXPECT_EQ(PlanChunks(items, layout, 100, 0).method, ChunkMethod::kSingle);
}

TEST(PlanChunks, InvalidInputs) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;  // sentinel: no error raised
  };
  const auto items = Items({40, 40});
  EXPECT_EQ(code([&] { PlanChunks({}, std::nullopt, 100, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code([&] { PlanChunks(items, std::nullopt, 10, 10); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code([&] { PlanChunks(items, std::nullopt, 45, 10); }), ErrorCode::kBudgetExceeded);
  const auto dup = std::vector<ChunkItem>{{"x", 1}, {"x", 1}};
  EXPECT_EQ(code([&] { PlanChunks(dup, std::nullopt, 45, 10); }), ErrorCode::kInvalidArgument);
  const std::vector<LayoutGroup> partial = {{"Alpha", {"p0"}}};
  EXPECT_EQ(code([&] { PlanChunks(items, partial, 60, 10); }), ErrorCode::kInvalidArgument);
  const std::vector<LayoutGroup> unknown = {{"Alpha", {"p0", "p1", "zz"}}};
  EXPECT_EQ(code([&] { PlanChunks(items, unknown, 60, 10); }), ErrorCode::kInvalidArgument);
  const std::vector<LayoutGroup> twice = {{"Alpha", {"p0", "p1"}}, {"Beta", {"p1"}}};
  EXPECT_EQ(code([&] { PlanChunks(items, twice, 60, 10); }), ErrorCode::kInvalidArgument);
}

TEST(PlanChunks, MethodNames) {
  EXPECT_EQ(ChunkMethodName(ChunkMethod::kSingle), "single");
  EXPECT_EQ(ChunkMethodName(ChunkMethod::kGoldLayout), "gold_layout");
  EXPECT_EQ(ChunkMethodName(ChunkMethod::kGreedy), "greedy");
}

const std::vector<ingest::BibEntry> kBib = {
    {"lee", "A", "Lee", 2019}, {"kim", "B", "Kim", 2020}, {"roy", "C", "Roy", 2021}};

TEST(LayoutFromRelatedWork, HeadingsDefineGroups) {
  const auto groups = LayoutFromRelatedWork(
      "# First\nLee et al. (2019) and Kim et al. (2020).\n# Second\nKim et al. (2020) again.\n",
      kBib);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].label, "First");
  EXPECT_EQ(groups[0].cited_ids, (std::vector<std::string>{"lee", "kim"}));
  // Roy is never mentioned and lands in the last group.
  EXPECT_EQ(groups[1].cited_ids, (std::vector<std::string>{"roy"}));
}

TEST(LayoutFromRelatedWork, ParagraphsWithoutHeadings) {
  const auto groups =
      LayoutFromRelatedWork("Roy et al. (2021) is first.\n\n\nThen Lee et al. (2019).", kBib);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].label, "paragraph-1");
  EXPECT_EQ(groups[0].cited_ids, (std::vector<std::string>{"roy"}));
  EXPECT_EQ(groups[1].cited_ids, (std::vector<std::string>{"lee", "kim"}));
}

TEST(LayoutFromRelatedWork, FixtureGoldCoversAllCitedPapers) {
  const auto corpus = lt::FixtureCorpus();
  const auto gold = lt::ReadFile(lt::FixturePath("gold_related_work.md"));
  std::vector<ingest::BibEntry> cited;
  for (const auto& r : corpus.cited) cited.push_back({r.paper_id, r.title, r.FirstAuthorLastName(), r.year});
  const auto groups = LayoutFromRelatedWork(gold, cited);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].label, "Multilingual Acoustic Modeling");
  size_t total = 0;
  for (const auto& g : groups) total += g.cited_ids.size();
  EXPECT_EQ(total, cited.size());
}

TEST(RelatedWorkBody, DropsHeadingsAndCollapsesBlankRuns) {
  EXPECT_EQ(RelatedWorkBody("# A\n\nOne.\n\n# B\n\nTwo.\n"), "One.\n\nTwo.");
  EXPECT_EQ(RelatedWorkBody("Plain text."), "Plain text.");
  EXPECT_EQ(RelatedWorkBody("# Only heading\n"), "");
}

}  // namespace
}  // namespace litreview::prompt
