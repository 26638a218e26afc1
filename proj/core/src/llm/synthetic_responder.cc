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

#include "litreview/llm/synthetic_responder.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace litreview::llm {
namespace {

std::vector<std::string> Lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string ValueAfter(const std::vector<std::string>& lines, std::string_view label) {
  for (const auto& line : lines) {
    if (StartsWith(line, label)) return Trim(std::string_view(line).substr(label.size()));
  }
  return "";
}

// First sentence (up to ". ") of `text`, without the final period.
std::string FirstSentence(std::string_view text) {
  size_t pos = text.find(". ");
  std::string s = Trim(pos == std::string_view::npos ? text : text.substr(0, pos));
  while (!s.empty() && (s.back() == '.' || s.back() == ':')) s.pop_back();
  return s;
}

std::string LowerFirst(std::string s) {
  if (s.size() > 1 && std::isupper(static_cast<unsigned char>(s[0])) &&
      !std::isupper(static_cast<unsigned char>(s[1]))) {
    s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  }
  return s;
}

std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-') {
      cur.push_back(c);
    } else if (!cur.empty()) {
      words.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(cur);
  return words;
}

std::string Faceted(const std::vector<std::string>& lines) {
  const std::string title = ValueAfter(lines, "Title:");
  const std::string abstract = ValueAfter(lines, "Abstract:");
  std::string first = FirstSentence(abstract);
  std::string rest = abstract.size() > first.size() + 2 ? abstract.substr(first.size() + 2) : "";
  std::string second = rest.empty() ? first : FirstSentence(rest);
  std::vector<std::string> words = Words(title);
  std::stable_sort(words.begin(), words.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  words.resize(std::min<size_t>(words.size(), 3));
  std::string keywords;
  for (const auto& w : words) {
    if (!keywords.empty()) keywords += "; ";
    keywords += LowerFirst(w);
  }
  if (keywords.empty()) keywords = "none";
  std::ostringstream out;
  out << "Objective: To study " << (title.empty() ? "the problem" : title) << ".\n"
      << "Method: " << (first.empty() ? "Not stated" : first) << ".\n"
      << "Findings: " << (second.empty() ? "Not stated" : second) << ".\n"
      << "Contribution: " << (title.empty() ? "A new study" : title) << ".\n"
      << "Keywords: " << keywords << ".";
  return out.str();
}

std::string Relation(const std::vector<std::string>& lines) {
  // "Citation contexts that X cites Y (which is cited as M):"
  for (size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (!StartsWith(line, "Citation contexts that ")) continue;
    std::string body = line.substr(std::string_view("Citation contexts that ").size());
    size_t paren = body.find(" (which is cited as");
    std::string pair = Trim(body.substr(0, paren));
    std::string evidence;
    if (i + 1 < lines.size() && StartsWith(lines[i + 1], "1. ")) {
      evidence = FirstSentence(lines[i + 1].substr(3));
    }
    std::vector<std::string> ev = Words(evidence);
    ev.resize(std::min<size_t>(ev.size(), 12));
    std::string gist;
    for (const auto& w : ev) gist += (gist.empty() ? "" : " ") + w;
    return pair + " as related prior work" + (gist.empty() ? "" : ", noting that " + gist) + ".";
  }
  return "The citing paper builds on the cited paper.";
}

std::string Usage(const std::vector<std::string>& lines) {
  std::string who = ValueAfter(lines, "How other papers cite");
  if (!who.empty() && who.back() == ':') who.pop_back();
  size_t fragments = 0;
  std::string first_relation;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (StartsWith(lines[i], "How other papers cite") && i + 1 < lines.size()) {
      first_relation = FirstSentence(lines[i + 1]);
    }
    if (lines[i].size() > 3 && std::isdigit(static_cast<unsigned char>(lines[i][0])) &&
        lines[i].find(". ") != std::string::npos) {
      ++fragments;
    }
  }
  std::vector<std::string> words = Words(first_relation);
  size_t skip = std::min<size_t>(words.size(), 6);
  std::string gist;
  for (size_t i = skip; i < std::min<size_t>(words.size(), skip + 10); ++i) {
    gist += (gist.empty() ? "" : " ") + words[i];
  }
  if (gist.empty()) gist = "its contribution to the field";
  const char* usage = fragments >= 2 ? "being discussed in detail as a dominant citation"
                                     : "brief background mention as a reference citation";
  return who + " is known for " + gist + " and it is cited for " + usage + ".";
}

std::string StripCitations(std::string_view text) {
  std::string out;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') {
      ++depth;
    } else if ((c == ')' || c == ']') && depth > 0) {
      --depth;
    } else if (depth == 0) {
      out.push_back(c);
    }
  }
  return out;
}

std::string MainIdea(const std::vector<std::string>& lines) {
  size_t start = 0;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find("Ignore citations.") != std::string::npos) start = i + 1;
  }
  std::vector<std::string> ideas;
  for (size_t i = start; i < lines.size(); ++i) {
    std::string line = Trim(lines[i]);
    if (line.empty()) continue;
    std::string s = FirstSentence(StripCitations(line));
    std::string compact;
    for (const auto& w : Words(s)) compact += (compact.empty() ? "" : " ") + w;
    if (!compact.empty()) ideas.push_back(compact + ".");
  }
  if (ideas.empty()) return "The section surveys prior work.";
  std::string out;
  for (const auto& idea : ideas) out += (out.empty() ? "" : " ") + idea;
  return out;
}

struct ListedPaper {
  std::string title;
  std::string author;
  std::string year;
  std::string cts;
};

std::string Generation(const std::vector<std::string>& lines) {
  std::string idea;
  std::vector<ListedPaper> papers;
  bool in_list = false;
  bool in_idea = false;
  bool in_cts = false;
  for (const auto& line : lines) {
    if (line == "Main idea of our related work section:") {
      in_idea = true;
      continue;
    }
    if (line == "List of cited papers:") {
      in_list = true;
      in_idea = false;
      continue;
    }
    if (in_idea && !line.empty() && idea.empty()) idea = Trim(line);
    if (!in_list) continue;
    size_t dot = line.find(". ");
    size_t by = line.rfind(" by ");
    size_t etal = line.rfind(" et al. ");
    if (dot != std::string::npos && by != std::string::npos && etal != std::string::npos &&
        by < etal && dot < by &&
        std::all_of(line.begin(), line.begin() + dot,
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
        dot > 0) {
      ListedPaper p;
      p.title = line.substr(dot + 2, by - dot - 2);
      p.author = line.substr(by + 4, etal - by - 4);
      p.year = Trim(line.substr(etal + 8));
      papers.push_back(p);
      in_cts = false;
      continue;
    }
    if (line == "Potentially useful sentences from this paper:") {
      in_cts = true;
      continue;
    }
    if (in_cts && !papers.empty() && papers.back().cts.empty() && !line.empty()) {
      std::string s = line;
      if (!s.empty() && s[0] == '[') {
        size_t close = s.find("] ");
        if (close != std::string::npos) s = s.substr(close + 2);
      }
      papers.back().cts = FirstSentence(StripCitations(s));
    }
  }
  std::vector<std::string> paragraphs;
  if (!idea.empty()) paragraphs.push_back(idea);
  const size_t groups = papers.size() > 3 ? 2 : 1;
  const size_t per = (papers.size() + groups - 1) / std::max<size_t>(groups, 1);
  for (size_t g = 0; g < groups && g * per < papers.size(); ++g) {
    std::string para;
    for (size_t i = g * per; i < std::min(papers.size(), (g + 1) * per); ++i) {
      const ListedPaper& p = papers[i];
      std::string sentence = p.author + " et al. (" + p.year + ") studied " + p.title +
                             ".";
      if (!p.cts.empty()) sentence += " Their work notes that " + LowerFirst(p.cts) + ".";
      para += (para.empty() ? "" : " ") + sentence;
    }
    paragraphs.push_back(para);
  }
  std::string out;
  for (const auto& p : paragraphs) out += (out.empty() ? "" : "\n\n") + p;
  return out.empty() ? "Related work is discussed below." : out;
}

}  // namespace

std::string SyntheticCompletion(std::string_view prompt) {
  const std::vector<std::string> lines = Lines(prompt);
  if (prompt.find("List of cited papers:") != std::string_view::npos) return Generation(lines);
  if (prompt.find("Ignore citations.") != std::string_view::npos) return MainIdea(lines);
  if (prompt.find("Very briefly answer what") != std::string_view::npos) return Usage(lines);
  if (prompt.find("Very briefly explain the relationship") != std::string_view::npos) {
    return Relation(lines);
  }
  if (prompt.find("Answer in the format of") != std::string_view::npos) return Faceted(lines);
  std::string echo = Trim(prompt.substr(0, std::min<size_t>(prompt.size(), 80)));
  return echo.empty() ? "OK" : echo;
}

}  // namespace litreview::llm
