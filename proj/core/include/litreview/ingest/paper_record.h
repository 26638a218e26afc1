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

#ifndef LITREVIEW_INGEST_PAPER_RECORD_H_
#define LITREVIEW_INGEST_PAPER_RECORD_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace litreview::ingest {

struct SectionBlock {
  std::string heading;
  std::string body;
  int index = 0;

  bool operator==(const SectionBlock&) const = default;
};

struct BibEntry {
  std::string bib_id;
  std::string title;
  std::string first_author_last_name;
  std::optional<int> year;

  bool operator==(const BibEntry&) const = default;
};

// One parsed paper, in the shape produced by a doc2json-style PDF parser.
struct PaperRecord {
  std::string paper_id;
  std::string title;
  std::string abstract;
  std::vector<SectionBlock> sections;
  std::vector<BibEntry> bibliography;
  std::optional<int> year;
  std::vector<std::string> authors;

  const BibEntry* FindBib(std::string_view bib_id) const;

  // Last name of authors[0], or "" when the record lists no authors.
  std::string FirstAuthorLastName() const;

  bool operator==(const PaperRecord&) const = default;
};

// "Jane Q. Smith" -> "Smith", "Smith, Jane" -> "Smith".
std::string LastNameOf(std::string_view author);

// Parses one UTF-8 JSON record. Throws Error{kParse} naming the JSON path of
// the first schema violation, and on duplicate bib ids or out-of-order
// section indices.
PaperRecord LoadPaperRecord(std::string_view bytes);
PaperRecord LoadPaperRecordFile(const std::filesystem::path& path);

nlohmann::json PaperRecordToJson(const PaperRecord& record);
std::string SerializePaperRecord(const PaperRecord& record);

}  // namespace litreview::ingest

#endif  // LITREVIEW_INGEST_PAPER_RECORD_H_
