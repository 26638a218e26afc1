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

#include "litreview/ingest/citation_markers.h"

namespace litreview::ingest {
namespace {

std::vector<BibEntry> AuthorYearBib() {
  return {{"smith23", "A Study", "Smith", 2023},
          {"lee20a", "Graphs", "Lee", 2020},
          {"lee20b", "More Graphs", "Lee", 2020},
          {"kim19", "Tagging", "Kim", 2019},
          {"garcia18", "Parsing", "García", 2018}};
}

std::vector<BibEntry> NumericBib() {
  std::vector<BibEntry> bib;
  for (int i = 1; i <= 6; ++i) bib.push_back({std::to_string(i), "t", "X", 2000 + i});
  return bib;
}

TEST(DetectCitationMentions, CanonicalAuthorYear) {
  const std::string text = "as shown by Smith et al. (2023)";
  const auto m = DetectCitationMentions(text, AuthorYearBib());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].bib_id, "smith23");
  EXPECT_EQ(m[0].style, CitationStyle::kAuthorYear);
  EXPECT_EQ(m[0].surface, "Smith et al. (2023)");
  EXPECT_EQ(text.substr(m[0].start, m[0].end - m[0].start), m[0].surface);
}

TEST(DetectCitationMentions, NumericGroupExpands) {
  const auto m = DetectCitationMentions("prior work [1, 3]", NumericBib());
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].bib_id, "1");
  EXPECT_EQ(m[1].bib_id, "3");
  EXPECT_EQ(m[0].style, CitationStyle::kNumeric);
  EXPECT_EQ(m[0].surface, "1");
  EXPECT_EQ(m[1].surface, "3");
  EXPECT_EQ(m[1].Marker(), "[3]");
}

TEST(DetectCitationMentions, NumericRangeExpands) {
  const auto m = DetectCitationMentions("see [2-4] and [6]", NumericBib());
  std::vector<std::string> ids;
  for (const auto& x : m) ids.push_back(x.bib_id);
  EXPECT_EQ(ids, (std::vector<std::string>{"2", "3", "4", "6"}));
  // Items of a range share the range's span.
  EXPECT_EQ(m[0].surface, "2-4");
  EXPECT_EQ(m[2].start, m[0].start);
  EXPECT_EQ(m[0].Marker(), "[2-4]");
}

TEST(DetectCitationMentions, FigureReferenceIsNotACitation) {
  EXPECT_TRUE(DetectCitationMentions("(see Figure 3)", AuthorYearBib()).empty());
  EXPECT_TRUE(DetectCitationMentions("in 2023 we ran tests", AuthorYearBib()).empty());
}

TEST(DetectCitationMentions, ParenthesizedListSplitsOnSemicolons) {
  const std::string text = "Graph methods (Lee, 2020a; Kim, 2019) are common.";
  const auto m = DetectCitationMentions(text, AuthorYearBib());
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].bib_id, "lee20a");
  EXPECT_EQ(m[1].bib_id, "kim19");
  for (const auto& x : m) EXPECT_EQ(text.substr(x.start, x.end - x.start), x.surface);
}

TEST(DetectCitationMentions, YearSuffixDisambiguates) {
  const auto m = DetectCitationMentions("Lee (2020b) extends it.", AuthorYearBib());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].bib_id, "lee20b");
}

TEST(DetectCitationMentions, NonAsciiSurname) {
  const std::string text = "Following García et al. (2018), we parse.";
  const auto m = DetectCitationMentions(text, AuthorYearBib());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].bib_id, "garcia18");
}

TEST(DetectCitationMentions, UnknownMarkerIsFlaggedUnresolved) {
  const auto m = DetectCitationMentions("Unrelated work (Zhou et al., 2017).", AuthorYearBib());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_FALSE(m[0].resolved());
  EXPECT_EQ(m[0].bib_id, kUnresolvedBibId);
}

TEST(DetectCitationMentions, OutputIsSortedAndSlicesMatch) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> pieces = {
      "Smith et al. (2023)", "(Lee, 2020a; Kim, 2019)", "[1, 3]", "[2-4]", "words", "(see Fig. 2)",
      "Kim (2019)",          "2021",                    ".",      ";",     "(",     ")"};
  std::vector<BibEntry> bib = AuthorYearBib();
  for (auto& b : NumericBib()) bib.push_back(b);
  for (int iter = 0; iter < 300; ++iter) {
    std::string text;
    for (int i = 0; i < 12; ++i) text += pieces[rng() % pieces.size()] + " ";
    const auto m = DetectCitationMentions(text, bib);
    for (std::size_t i = 0; i < m.size(); ++i) {
      ASSERT_LT(m[i].start, m[i].end);
      ASSERT_LE(m[i].end, text.size());
      ASSERT_EQ(text.substr(m[i].start, m[i].end - m[i].start), m[i].surface);
      if (i > 0) ASSERT_LE(m[i - 1].start, m[i].start);
    }
  }
}

TEST(CitationStyleName, Names) {
  EXPECT_EQ(CitationStyleName(CitationStyle::kAuthorYear), "author-year");
  EXPECT_EQ(CitationStyleName(CitationStyle::kNumeric), "numeric");
}

}  // namespace
}  // namespace litreview::ingest
