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

#include "litreview/ingest/citation_spans.h"

#include <array>
#include <optional>

#include "litreview/error.h"
#include "litreview/ingest/sentences.h"

namespace litreview::ingest {
namespace {

constexpr std::array<std::string_view, 10> kContinuationCues = {
    "Their ", "They ", "This approach", "This method", "This model",
    "This work", "These ", "Its ", "Theirs ", "Them "};

struct SentenceMentions {
  Sentence sentence;
  // resolved bib id -> marker of its first mention in the sentence
  std::map<std::string, std::string> markers;
};

std::vector<SentenceMentions> AnnotateSentences(std::string_view text,
                                                std::span<const BibEntry> bibliography) {
  std::vector<SentenceMentions> out;
  auto mentions = DetectCitationMentions(text, bibliography);
  size_t m = 0;
  for (auto& sentence : SegmentSentences(text)) {
    SentenceMentions annotated{std::move(sentence), {}};
    while (m < mentions.size() && mentions[m].start < annotated.sentence.end) {
      const auto& mention = mentions[m];
      if (mention.start >= annotated.sentence.start && mention.resolved()) {
        annotated.markers.emplace(mention.bib_id, mention.Marker());
      }
      ++m;
    }
    out.push_back(std::move(annotated));
  }
  return out;
}

// Appends the spans of `bib_id` found in one block of annotated sentences.
void CollectSpans(const std::vector<SentenceMentions>& sentences, const std::string& bib_id,
                  std::string_view host, size_t first_position,
                  std::vector<CitationSpan>& out) {
  size_t i = 0;
  while (i < sentences.size()) {
    auto hit = sentences[i].markers.find(bib_id);
    if (hit == sentences[i].markers.end()) {
      ++i;
      continue;
    }
    CitationSpan span;
    span.bib_id = bib_id;
    span.host_paper_id = std::string(host);
    span.position = first_position + i;
    span.marker = hit->second;
    span.sentences.push_back(sentences[i].sentence.text);
    size_t j = i + 1;
    while (j < sentences.size() && span.sentences.size() < kMaxSpanSentences &&
           StartsWithContinuationCue(sentences[j].sentence.text)) {
      span.sentences.push_back(sentences[j].sentence.text);
      ++j;
    }
    out.push_back(std::move(span));
    i = j;
  }
}

}  // namespace

std::string CitationSpan::Text() const {
  std::string out;
  for (const auto& s : sentences) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

void to_json(nlohmann::json& j, const CitationSpan& span) {
  j = nlohmann::json{{"bib_id", span.bib_id},
                     {"sentences", span.sentences},
                     {"host_paper_id", span.host_paper_id},
                     {"position", span.position},
                     {"marker", span.marker}};
}

void from_json(const nlohmann::json& j, CitationSpan& span) {
  j.at("bib_id").get_to(span.bib_id);
  j.at("sentences").get_to(span.sentences);
  j.at("host_paper_id").get_to(span.host_paper_id);
  j.at("position").get_to(span.position);
  j.at("marker").get_to(span.marker);
}

bool StartsWithContinuationCue(std::string_view sentence) {
  for (auto cue : kContinuationCues) {
    if (sentence.substr(0, cue.size()) == cue) return true;
  }
  return false;
}

std::vector<CitationSpan> ExtractCitationSpans(const PaperRecord& record,
                                               std::string_view bib_id) {
  if (record.FindBib(bib_id) == nullptr) {
    throw Error(ErrorCode::kNotFound, "bib id '" + std::string(bib_id) +
                                          "' not in bibliography of " + record.paper_id);
  }
  std::vector<CitationSpan> spans;
  const std::string id(bib_id);
  size_t position = 0;
  for (const auto& section : record.sections) {
    auto sentences = AnnotateSentences(section.body, record.bibliography);
    CollectSpans(sentences, id, record.paper_id, position, spans);
    position += sentences.size();
  }
  return spans;
}

std::map<std::string, std::vector<CitationSpan>> ExtractAllSpans(
    std::string_view text, std::span<const BibEntry> bibliography,
    std::string_view host_paper_id, std::size_t first_position) {
  auto sentences = AnnotateSentences(text, bibliography);
  std::map<std::string, std::vector<CitationSpan>> out;
  for (const auto& s : sentences) {
    for (const auto& [id, marker] : s.markers) out.try_emplace(id);
  }
  for (auto& [id, spans] : out) {
    CollectSpans(sentences, id, host_paper_id, first_position, spans);
  }
  return out;
}

}  // namespace litreview::ingest
