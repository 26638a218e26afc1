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

#include "litreview/ingest/paper_record.h"

#include <fstream>
#include <set>
#include <sstream>

#include "litreview/error.h"

namespace litreview::ingest {
namespace {

using nlohmann::json;

[[noreturn]] void SchemaError(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParse, "schema violation at " + path + ": " + what,
              path);
}

std::string RequireString(const json& obj, const std::string& key,
                          const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) SchemaError(path + "." + key, "missing required field");
  if (!it->is_string()) SchemaError(path + "." + key, "expected a string");
  return it->get<std::string>();
}

std::string OptionalString(const json& obj, const std::string& key,
                           const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) SchemaError(path + "." + key, "expected a string");
  return it->get<std::string>();
}

std::optional<int> OptionalYear(const json& obj, const std::string& key,
                                const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (it->is_number_integer()) return it->get<int>();
  // Some parsers emit years as strings.
  if (it->is_string()) {
    const std::string& s = it->get_ref<const std::string&>();
    if (s.empty()) return std::nullopt;
    try {
      size_t used = 0;
      int year = std::stoi(s, &used);
      if (used == s.size()) return year;
    } catch (const std::exception&) {
    }
  }
  SchemaError(path + "." + key, "expected an integer year or null");
}

const json& RequireArray(const json& obj, const std::string& key,
                         const std::string& path) {
  static const json kEmpty = json::array();
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return kEmpty;
  if (!it->is_array()) SchemaError(path + "." + key, "expected an array");
  return *it;
}

}  // namespace

const BibEntry* PaperRecord::FindBib(std::string_view bib_id) const {
  for (const auto& entry : bibliography) {
    if (entry.bib_id == bib_id) return &entry;
  }
  return nullptr;
}

std::string PaperRecord::FirstAuthorLastName() const {
  return authors.empty() ? std::string() : LastNameOf(authors.front());
}

std::string LastNameOf(std::string_view author) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  author = trim(author);
  if (auto comma = author.find(','); comma != std::string_view::npos) {
    return std::string(trim(author.substr(0, comma)));
  }
  auto space = author.find_last_of(' ');
  if (space == std::string_view::npos) return std::string(author);
  return std::string(author.substr(space + 1));
}

PaperRecord LoadPaperRecord(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse,
                std::string("malformed JSON record: ") + e.what(), "$");
  }
  if (!doc.is_object()) SchemaError("$", "expected an object");

  PaperRecord record;
  record.paper_id = RequireString(doc, "paper_id", "$");
  if (record.paper_id.empty()) SchemaError("$.paper_id", "must be non-empty");
  record.title = RequireString(doc, "title", "$");
  record.abstract = RequireString(doc, "abstract", "$");
  record.year = OptionalYear(doc, "year", "$");

  const json& authors = RequireArray(doc, "authors", "$");
  for (size_t i = 0; i < authors.size(); ++i) {
    if (!authors[i].is_string()) {
      SchemaError("$.authors[" + std::to_string(i) + "]", "expected a string");
    }
    record.authors.push_back(authors[i].get<std::string>());
  }

  const json& sections = RequireArray(doc, "sections", "$");
  for (size_t i = 0; i < sections.size(); ++i) {
    const std::string path = "$.sections[" + std::to_string(i) + "]";
    const json& s = sections[i];
    if (!s.is_object()) SchemaError(path, "expected an object");
    SectionBlock block;
    block.heading = OptionalString(s, "heading", path);
    block.body = OptionalString(s, "body", path);
    block.index = static_cast<int>(i);
    if (auto it = s.find("index"); it != s.end() && !it->is_null()) {
      if (!it->is_number_integer()) SchemaError(path + ".index", "expected an integer");
      block.index = it->get<int>();
    }
    if (!record.sections.empty() && block.index <= record.sections.back().index) {
      SchemaError(path + ".index", "section indices must be strictly increasing");
    }
    record.sections.push_back(std::move(block));
  }

  std::set<std::string> seen;
  const json& bib = RequireArray(doc, "bibliography", "$");
  for (size_t i = 0; i < bib.size(); ++i) {
    const std::string path = "$.bibliography[" + std::to_string(i) + "]";
    const json& b = bib[i];
    if (!b.is_object()) SchemaError(path, "expected an object");
    BibEntry entry;
    entry.bib_id = RequireString(b, "bib_id", path);
    if (entry.bib_id.empty()) SchemaError(path + ".bib_id", "must be non-empty");
    entry.title = OptionalString(b, "title", path);
    // An explicit last-name field wins over splitting the display name.
    if (b.contains("first_author_last_name")) {
      entry.first_author_last_name = OptionalString(b, "first_author_last_name", path);
    } else {
      entry.first_author_last_name = LastNameOf(OptionalString(b, "first_author", path));
    }
    entry.year = OptionalYear(b, "year", path);
    if (!seen.insert(entry.bib_id).second) {
      throw Error(ErrorCode::kParse,
                  "duplicate bib_id '" + entry.bib_id + "' at " + path, path);
    }
    record.bibliography.push_back(std::move(entry));
  }
  return record;
}

PaperRecord LoadPaperRecordFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return LoadPaperRecord(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what(), e.detail());
  }
}

nlohmann::json PaperRecordToJson(const PaperRecord& record) {
  json doc;
  doc["paper_id"] = record.paper_id;
  doc["title"] = record.title;
  doc["abstract"] = record.abstract;
  doc["authors"] = record.authors;
  doc["year"] = record.year ? json(*record.year) : json(nullptr);
  doc["sections"] = json::array();
  for (const auto& s : record.sections) {
    doc["sections"].push_back({{"heading", s.heading}, {"body", s.body}, {"index", s.index}});
  }
  doc["bibliography"] = json::array();
  for (const auto& b : record.bibliography) {
    doc["bibliography"].push_back({{"bib_id", b.bib_id},
                                   {"title", b.title},
                                   {"first_author", b.first_author_last_name},
                                   {"first_author_last_name", b.first_author_last_name},
                                   {"year", b.year ? json(*b.year) : json(nullptr)}});
  }
  return doc;
}

std::string SerializePaperRecord(const PaperRecord& record) {
  return PaperRecordToJson(record).dump(2);
}

}  // namespace litreview::ingest
