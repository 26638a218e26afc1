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

#include "litreview/metrics/rouge.h"

#include <algorithm>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "litreview/error.h"

namespace litreview::metrics {
namespace {

// n-grams are keyed by their tokens joined with a byte the tokenizer never
// emits.
std::unordered_map<std::string, long> CountNgrams(std::span<const std::string> tokens, int n) {
  std::unordered_map<std::string, long> counts;
  const size_t width = static_cast<size_t>(n);
  if (tokens.size() < width) return counts;
  for (size_t i = 0; i + width <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (size_t k = 1; k < width; ++k) {
      key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

RougeScore MakeRougeScore(double precision, double recall) {
  RougeScore s{precision, recall, 0.0};
  if (precision + recall > 0.0) s.f1 = 2.0 * precision * recall / (precision + recall);
  return s;
}

RougeScore RougeN(std::span<const std::string> candidate,
                  std::span<const std::string> reference, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "rouge n must be >= 1");
  const auto cand = CountNgrams(candidate, n);
  const auto ref = CountNgrams(reference, n);
  if (cand.empty() || ref.empty()) return {};
  long overlap = 0;
  for (const auto& [gram, count] : cand) {
    auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  const double cand_total = static_cast<double>(candidate.size() - static_cast<size_t>(n) + 1);
  const double ref_total = static_cast<double>(reference.size() - static_cast<size_t>(n) + 1);
  return MakeRougeScore(static_cast<double>(overlap) / cand_total,
                        static_cast<double>(overlap) / ref_total);
}

std::size_t LcsLength(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<size_t> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

RougeScore RougeL(std::span<const std::string> candidate,
                  std::span<const std::string> reference) {
  if (candidate.empty() || reference.empty()) return {};
  const double lcs = static_cast<double>(LcsLength(candidate, reference));
  return MakeRougeScore(lcs / static_cast<double>(candidate.size()),
                        lcs / static_cast<double>(reference.size()));
}

}  // namespace litreview::metrics
