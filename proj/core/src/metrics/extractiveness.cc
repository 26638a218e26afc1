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

#include "litreview/metrics/extractiveness.h"

#include <string_view>
#include <unordered_map>

#include "litreview/error.h"

namespace litreview::metrics {

std::vector<Fragment> ExtractiveFragments(std::span<const std::string> source,
                                          std::span<const std::string> generated) {
  std::unordered_map<std::string_view, std::vector<size_t>> occurrences;
  for (size_t p = 0; p < source.size(); ++p) occurrences[source[p]].push_back(p);

  std::vector<Fragment> fragments;
  size_t i = 0;
  while (i < generated.size()) {
    size_t best_len = 0;
    size_t best_src = 0;
    auto it = occurrences.find(generated[i]);
    if (it != occurrences.end()) {
      for (size_t p : it->second) {
        size_t len = 1;
        while (p + len < source.size() && i + len < generated.size() &&
               source[p + len] == generated[i + len]) {
          ++len;
        }
        if (len > best_len) {
          best_len = len;
          best_src = p;
        }
      }
    }
    if (best_len == 0) {
      ++i;
      continue;
    }
    Fragment f;
    f.tokens.assign(generated.begin() + static_cast<std::ptrdiff_t>(i),
                    generated.begin() + static_cast<std::ptrdiff_t>(i + best_len));
    f.source_start = best_src;
    f.gen_start = i;
    f.length = best_len;
    fragments.push_back(std::move(f));
    i += best_len;
  }
  return fragments;
}

CoverageDensity ComputeCoverageDensity(std::span<const Fragment> fragments,
                                       std::size_t generated_len) {
  if (generated_len == 0) {
    throw Error(ErrorCode::kInvalidArgument, "coverage/density need a non-empty generated text");
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  for (const auto& f : fragments) {
    const double len = static_cast<double>(f.length);
    sum += len;
    sum_sq += len * len;
  }
  const double n = static_cast<double>(generated_len);
  return CoverageDensity{sum / n, sum_sq / n};
}

}  // namespace litreview::metrics
