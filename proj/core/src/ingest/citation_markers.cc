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

#include "litreview/ingest/citation_markers.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>

namespace litreview::ingest {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAsciiAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool IsNameChar(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalpha(u) || u >= 0x80 || c == '\'' || c == '-';
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

// Capitalized words that precede years in ordinary prose.
constexpr std::array<std::string_view, 36> kNotAuthors = {
    "In",      "From",     "Since",    "Until",    "By",      "Before",
    "After",   "During",   "Table",    "Figure",   "Fig",     "Section",
    "Year",    "The",      "And",      "Of",       "At",      "On",
    "To",      "As",       "Early",    "Late",     "Mid",     "January",
    "February", "March",   "April",    "May",      "June",    "July",
    "August",  "September", "October", "November", "December", "Circa"};

bool IsNotAuthor(std::string_view word) {
  return std::find(kNotAuthors.begin(), kNotAuthors.end(), word) != kNotAuthors.end();
}

size_t SkipSpacesBack(std::string_view text, size_t q) {
  while (q > 0 && text[q - 1] == ' ') --q;
  return q;
}

bool EndsWith(std::string_view text, size_t q, std::string_view suffix) {
  return q >= suffix.size() && text.substr(q - suffix.size(), suffix.size()) == suffix;
}

// Parses a capitalized surname ending at q; returns its start or npos.
size_t NameStartBefore(std::string_view text, size_t q) {
  size_t r = q;
  while (r > 0 && IsNameChar(text[r - 1])) --r;
  if (r == q || q - r < 2) return std::string_view::npos;
  if (r > 0 && IsAsciiAlnum(text[r - 1])) return std::string_view::npos;
  unsigned char first = static_cast<unsigned char>(text[r]);
  if (!std::isupper(first) && first < 0x80) return std::string_view::npos;
  bool has_lower = false;
  for (size_t i = r; i < q; ++i) {
    if (std::islower(static_cast<unsigned char>(text[i]))) has_lower = true;
  }
  if (!has_lower) return std::string_view::npos;
  if (IsNotAuthor(text.substr(r, q - r))) return std::string_view::npos;
  return r;
}

// True when an unclosed '(' precedes `pos` in the same parenthetical group.
bool InsideParentheses(std::string_view text, size_t pos) {
  size_t scanned = 0;
  for (size_t i = pos; i > 0 && scanned < 240; --i, ++scanned) {
    char c = text[i - 1];
    if (c == ')' || c == '\n') return false;
    if (c == '(') return true;
  }
  return false;
}

struct AuthorYearMatch {
  size_t start;
  size_t end;
  std::string surname;
  int year;
  std::optional<char> suffix;
};

std::optional<AuthorYearMatch> MatchAuthorYearAt(std::string_view text, size_t year_start) {
  const size_t n = text.size();
  if (year_start + 4 > n) return std::nullopt;
  if (!(text.substr(year_start, 2) == "19" || text.substr(year_start, 2) == "20")) {
    return std::nullopt;
  }
  for (size_t k = 0; k < 4; ++k) {
    if (!IsDigit(text[year_start + k])) return std::nullopt;
  }
  if (year_start > 0 && IsAsciiAlnum(text[year_start - 1])) return std::nullopt;
  size_t year_end = year_start + 4;
  std::optional<char> suffix;
  if (year_end < n && text[year_end] >= 'a' && text[year_end] <= 'z' &&
      (year_end + 1 >= n || !IsAsciiAlnum(text[year_end + 1]))) {
    suffix = text[year_end];
    ++year_end;
  } else if (year_end < n && IsAsciiAlnum(text[year_end])) {
    return std::nullopt;
  }

  size_t q = year_start;
  bool paren_year = false;
  if (q > 0 && text[q - 1] == '(') {
    paren_year = true;
    --q;
  }
  size_t after_name = SkipSpacesBack(text, q);
  bool comma = false;
  if (after_name > 0 && text[after_name - 1] == ',') {
    comma = true;
    after_name = SkipSpacesBack(text, after_name - 1);
  }
  // The grammar wants a space between the name part and a bare year.
  if (!comma && after_name == q) return std::nullopt;
  bool et_al = false;
  if (EndsWith(text, after_name, "et al.")) {
    et_al = true;
    after_name -= 6;
  } else if (EndsWith(text, after_name, "et al")) {
    et_al = true;
    after_name -= 5;
  }
  if (et_al) {
    size_t trimmed = SkipSpacesBack(text, after_name);
    if (trimmed == after_name) return std::nullopt;
    after_name = trimmed;
  }
  size_t name_start = NameStartBefore(text, after_name);
  if (name_start == std::string_view::npos) return std::nullopt;
  std::string surname(text.substr(name_start, after_name - name_start));

  // "Smith and Lee" / "Smith & Lee": the first author is the earlier name.
  size_t start = name_start;
  for (std::string_view joiner : {std::string_view(" and "), std::string_view(" & ")}) {
    if (!et_al && EndsWith(text, name_start, joiner)) {
      size_t first_end = name_start - joiner.size();
      size_t first_start = NameStartBefore(text, first_end);
      if (first_start != std::string_view::npos) {
        surname = std::string(text.substr(first_start, first_end - first_start));
        start = first_start;
      }
      break;
    }
  }

  if (!(paren_year || comma || et_al || InsideParentheses(text, start))) {
    return std::nullopt;
  }
  size_t end = year_end;
  if (paren_year && end < n && text[end] == ')') ++end;

  return AuthorYearMatch{start, end, std::move(surname),
                         std::stoi(std::string(text.substr(year_start, 4))), suffix};
}

std::string ResolveAuthorYear(const AuthorYearMatch& m, std::span<const BibEntry> bib) {
  std::vector<const BibEntry*> same_year;
  std::vector<const BibEntry*> undated;
  for (const auto& entry : bib) {
    if (!EqualsIgnoreCase(entry.first_author_last_name, m.surname)) continue;
    if (entry.year && *entry.year == m.year) same_year.push_back(&entry);
    if (!entry.year) undated.push_back(&entry);
  }
  if (!same_year.empty()) {
    size_t pick = 0;
    if (m.suffix) {
      size_t idx = static_cast<size_t>(*m.suffix - 'a');
      if (idx < same_year.size()) pick = idx;
    }
    return same_year[pick]->bib_id;
  }
  if (undated.size() == 1) return undated.front()->bib_id;
  return std::string(kUnresolvedBibId);
}

std::string ResolveNumber(int number, std::span<const BibEntry> bib) {
  const std::string plain = std::to_string(number);
  const std::string bracketed = "[" + plain + "]";
  for (const auto& entry : bib) {
    if (entry.bib_id == plain || entry.bib_id == bracketed) return entry.bib_id;
  }
  if (number >= 1 && static_cast<size_t>(number) <= bib.size()) {
    return bib[static_cast<size_t>(number) - 1].bib_id;
  }
  return std::string(kUnresolvedBibId);
}

// Length in bytes of a range dash at text[i] ('-', en dash, em dash), or 0.
size_t DashLength(std::string_view text, size_t i) {
  if (text[i] == '-') return 1;
  if (text.substr(i, 3) == "\xE2\x80\x93" || text.substr(i, 3) == "\xE2\x80\x94") return 3;
  return 0;
}

size_t ParseNumber(std::string_view text, size_t i, int& value) {
  size_t j = i;
  while (j < text.size() && IsDigit(text[j]) && j - i < 6) ++j;
  if (j == i || (j < text.size() && IsDigit(text[j]))) return 0;
  value = std::stoi(std::string(text.substr(i, j - i)));
  return j - i;
}

// Parses "[1, 3, 5-7]" starting at the '['. Returns false if the bracket does
// not hold a numeric citation list.
bool MatchNumericGroup(std::string_view text, size_t open, std::span<const BibEntry> bib,
                       std::vector<CitationMention>& out) {
  std::vector<CitationMention> found;
  size_t i = open + 1;
  const size_t n = text.size();
  while (true) {
    while (i < n && text[i] == ' ') ++i;
    int first = 0;
    size_t len = ParseNumber(text, i, first);
    if (len == 0) return false;
    size_t item_start = i;
    i += len;
    size_t j = i;
    while (j < n && text[j] == ' ') ++j;
    size_t dash = j < n ? DashLength(text, j) : 0;
    if (dash > 0) {
      size_t k = j + dash;
      while (k < n && text[k] == ' ') ++k;
      int last = 0;
      size_t len2 = ParseNumber(text, k, last);
      if (len2 == 0 || last < first || last - first > 200) return false;
      i = k + len2;
      for (int v = first; v <= last; ++v) {
        found.push_back(CitationMention{ResolveNumber(v, bib),
                                        std::string(text.substr(item_start, i - item_start)),
                                        item_start, i, CitationStyle::kNumeric});
      }
    } else {
      found.push_back(CitationMention{ResolveNumber(first, bib), std::string(text.substr(item_start, len)),
                                      item_start, i, CitationStyle::kNumeric});
    }
    while (i < n && text[i] == ' ') ++i;
    if (i >= n) return false;
    if (text[i] == ']') break;
    if (text[i] != ',' && text[i] != ';') return false;
    ++i;
  }
  out.insert(out.end(), found.begin(), found.end());
  return true;
}

}  // namespace

std::string_view CitationStyleName(CitationStyle style) {
  return style == CitationStyle::kNumeric ? "numeric" : "author-year";
}

std::string CitationMention::Marker() const {
  if (style == CitationStyle::kNumeric) return "[" + surface + "]";
  return surface;
}

std::vector<CitationMention> DetectCitationMentions(std::string_view text,
                                                    std::span<const BibEntry> bibliography) {
  std::vector<CitationMention> candidates;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') {
      MatchNumericGroup(text, i, bibliography, candidates);
    } else if (IsDigit(text[i])) {
      if (auto m = MatchAuthorYearAt(text, i)) {
        std::string id = ResolveAuthorYear(*m, bibliography);
        candidates.push_back(CitationMention{std::move(id),
                                             std::string(text.substr(m->start, m->end - m->start)),
                                             m->start, m->end, CitationStyle::kAuthorYear});
        i = m->end - 1;
      } else {
        while (i + 1 < text.size() && IsDigit(text[i + 1])) ++i;
      }
    }
  }

  // Longest-match-first among overlapping spans; mentions sharing one span
  // (expanded ranges) are kept or dropped together.
  std::vector<size_t> order(candidates.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    size_t la = candidates[a].end - candidates[a].start;
    size_t lb = candidates[b].end - candidates[b].start;
    if (la != lb) return la > lb;
    return candidates[a].start < candidates[b].start;
  });
  std::vector<CitationMention> kept;
  for (size_t idx : order) {
    const auto& c = candidates[idx];
    bool clash = false;
    for (const auto& k : kept) {
      bool same_span = k.start == c.start && k.end == c.end;
      if (!same_span && c.start < k.end && k.start < c.end) {
        clash = true;
        break;
      }
    }
    if (!clash) kept.push_back(c);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.start < b.start;
  });
  return kept;
}

}  // namespace litreview::ingest
