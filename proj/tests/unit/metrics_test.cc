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
#include "litreview/metrics/extractiveness.h"
#include "litreview/metrics/rouge.h"
#include "litreview/metrics/tokenize.h"
#include "support/test_support.h"

namespace litreview::metrics {
namespace {

namespace lt = litreview::testing;
using Tokens = std::vector<std::string>;

TEST(TokenizeForMetrics, DeclaredRule) {
  EXPECT_EQ(TokenizeForMetrics("The cat's mat."), (Tokens{"the", "cat", "s", "mat"}));
  EXPECT_TRUE(TokenizeForMetrics("").empty());
  EXPECT_TRUE(TokenizeForMetrics(" ,.;- ").empty());
  EXPECT_EQ(TokenizeForMetrics("GPT-2 in 2023"), (Tokens{"gpt", "2", "in", "2023"}));
}

TEST(TokenizeForMetrics, NonAsciiBytesStayInsideTokens) {
  EXPECT_EQ(TokenizeForMetrics("García's café"), (Tokens{"garcía", "s", "café"}));
}

TEST(TokenizeForMetrics, IdempotentUnderRejoin) {
  std::mt19937_64 rng(3);
  const std::string alphabet = "aZ9 .,'-()Q\n";
  for (int i = 0; i < 200; ++i) {
    std::string text;
    for (int k = 0; k < 40; ++k) text += alphabet[rng() % alphabet.size()];
    const Tokens once = TokenizeForMetrics(text);
    std::string joined;
    for (const auto& t : once) joined += t + " ";
    EXPECT_EQ(TokenizeForMetrics(joined), once);
  }
}

const Tokens kCand = TokenizeForMetrics("the cat sat on the mat");
const Tokens kRef = TokenizeForMetrics("the cat lay on the mat");

TEST(RougeN, HandCountedExample) {
  EXPECT_DOUBLE_EQ(RougeN(kCand, kRef, 1).recall, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(RougeN(kCand, kRef, 2).recall, 3.0 / 5.0);
}

TEST(RougeN, IdentityAndDisjoint) {
  const auto same = RougeN(kRef, kRef, 2);
  EXPECT_EQ(same.precision, 1.0);
  EXPECT_EQ(same.recall, 1.0);
  EXPECT_EQ(same.f1, 1.0);
  const auto none = RougeN(Tokens{"a", "b"}, Tokens{"c", "d"}, 1);
  EXPECT_EQ(none.f1, 0.0);
}

TEST(RougeN, ClipsRepeatedNgrams) {
  const auto s = RougeN(Tokens{"the", "the", "the"}, Tokens{"the", "cat"}, 1);
  EXPECT_DOUBLE_EQ(s.precision, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.recall, 1.0 / 2.0);
}

TEST(RougeN, EmptyNgramSetsScoreZero) {
  const auto s = RougeN(Tokens{"a"}, Tokens{"a"}, 2);
  EXPECT_EQ(s.precision, 0.0);
  EXPECT_EQ(s.recall, 0.0);
  EXPECT_EQ(s.f1, 0.0);
}

TEST(RougeN, RejectsNonPositiveOrder) {
  EXPECT_THROW(RougeN(kCand, kRef, 0), Error);
}

TEST(RougeL, HandExample) {
  EXPECT_EQ(LcsLength(kCand, kRef), 5u);
  EXPECT_DOUBLE_EQ(RougeL(kCand, kRef).recall, 5.0 / 6.0);
  EXPECT_EQ(RougeL(kRef, kRef).f1, 1.0);
  EXPECT_EQ(RougeL(Tokens{}, kRef).f1, 0.0);
}

TEST(Rouge, SwapExchangesPrecisionAndRecall) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto a = lt::RandomTokens(rng, 12, 4);
    const auto b = lt::RandomTokens(rng, 12, 4);
    for (int n = 1; n <= 3; ++n) {
      const auto ab = RougeN(a, b, n);
      const auto ba = RougeN(b, a, n);
      EXPECT_EQ(ab.precision, ba.recall);
      EXPECT_EQ(ab.recall, ba.precision);
      EXPECT_EQ(ab.f1, ba.f1);
    }
    const auto lab = RougeL(a, b);
    const auto lba = RougeL(b, a);
    EXPECT_EQ(lab.precision, lba.recall);
    EXPECT_EQ(lab.f1, lba.f1);
  }
}

TEST(Rouge, SelfScoreIsOne) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    const auto x = lt::RandomTokens(rng, 12, 4, 1);
    for (int n = 1; n <= static_cast<int>(x.size()); ++n) EXPECT_EQ(RougeN(x, x, n).f1, 1.0);
  }
}

TEST(Rouge, MatchesOracles) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto c = lt::RandomTokens(rng, 15, 5);
    const auto r = lt::RandomTokens(rng, 15, 5);
    for (int n = 1; n <= 3; ++n) {
      const auto got = RougeN(c, r, n);
      const auto want = lt::oracle::RougeN(c, r, n);
      EXPECT_NEAR(got.precision, want.precision, 1e-12);
      EXPECT_NEAR(got.recall, want.recall, 1e-12);
      EXPECT_NEAR(got.f1, want.f1, 1e-12);
    }
    EXPECT_EQ(LcsLength(c, r), lt::oracle::Lcs(c, r));
  }
}

TEST(MakeRougeScore, F1IsHarmonicMeanOrZero) {
  EXPECT_EQ(MakeRougeScore(0, 0).f1, 0.0);
  EXPECT_DOUBLE_EQ(MakeRougeScore(0.5, 1.0).f1, 2.0 / 3.0);
}

TEST(ExtractiveFragments, HandRunGreedyScan) {
  const Tokens source = {"a", "b", "c", "d", "e"};
  const Tokens gen = {"a", "b", "x", "d", "e"};
  const auto f = ExtractiveFragments(source, gen);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].tokens, (Tokens{"a", "b"}));
  EXPECT_EQ(f[1].tokens, (Tokens{"d", "e"}));
  EXPECT_EQ(f[1].source_start, 3u);
  EXPECT_EQ(f[1].gen_start, 3u);
  const auto cd = ComputeCoverageDensity(f, gen.size());
  EXPECT_DOUBLE_EQ(cd.coverage, 0.8);
  EXPECT_DOUBLE_EQ(cd.density, 1.6);
}

TEST(ExtractiveFragments, FullCopyAndNoOverlap) {
  const Tokens s = {"p", "q", "r", "p"};
  const auto f = ExtractiveFragments(s, s);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].length, 4u);
  const auto cd = ComputeCoverageDensity(f, s.size());
  EXPECT_EQ(cd.coverage, 1.0);
  EXPECT_EQ(cd.density, 4.0);
  EXPECT_TRUE(ExtractiveFragments(s, Tokens{"z", "y"}).empty());
  const auto zero = ComputeCoverageDensity({}, 2);
  EXPECT_EQ(zero.coverage, 0.0);
  EXPECT_EQ(zero.density, 0.0);
}

TEST(ExtractiveFragments, EarliestSourceOccurrenceWinsTies) {
  const auto f = ExtractiveFragments(Tokens{"x", "a", "b", "y", "a", "b"}, Tokens{"a", "b"});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].source_start, 1u);
}

TEST(ComputeCoverageDensity, EmptyGenerationIsAnError) {
  EXPECT_THROW(ComputeCoverageDensity({}, 0), Error);
}

TEST(ExtractiveFragments, SoundnessAndBoundsOnRandomInputs) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    const auto source = lt::RandomTokens(rng, 20, 4);
    const auto gen = lt::RandomTokens(rng, 20, 4, 1);
    const auto frags = ExtractiveFragments(source, gen);
    ASSERT_EQ(frags, lt::oracle::Fragments(source, gen));
    std::size_t prev_end = 0;
    for (const auto& f : frags) {
      ASSERT_GE(f.length, 1u);
      ASSERT_EQ(f.tokens.size(), f.length);
      ASSERT_GE(f.gen_start, prev_end);
      for (std::size_t k = 0; k < f.length; ++k) {
        ASSERT_EQ(gen[f.gen_start + k], f.tokens[k]);
        ASSERT_EQ(source[f.source_start + k], f.tokens[k]);
      }
      prev_end = f.gen_start + f.length;
    }
    const auto cd = ComputeCoverageDensity(frags, gen.size());
    ASSERT_LE(cd.coverage, 1.0);
    ASSERT_GE(cd.density, cd.coverage);
  }
}

}  // namespace
}  // namespace litreview::metrics
