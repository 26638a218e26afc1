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

#ifndef LITREVIEW_METRICS_EXTRACTIVENESS_H_
#define LITREVIEW_METRICS_EXTRACTIVENESS_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace litreview::metrics {

// A token run shared by the source and the generated sequence.
struct Fragment {
  std::vector<std::string> tokens;
  std::size_t source_start = 0;
  std::size_t gen_start = 0;
  std::size_t length = 0;

  bool operator==(const Fragment&) const = default;
};

// Greedy left-to-right scan of `generated`: at each position take the longest
// run that also occurs in `source` (earliest source occurrence on ties) and
// jump past it; otherwise advance by one token.
std::vector<Fragment> ExtractiveFragments(std::span<const std::string> source,
                                          std::span<const std::string> generated);

struct CoverageDensity {
  double coverage = 0.0;  // sum |f| / |S|
  double density = 0.0;   // sum |f|^2 / |S|
};

// Throws Error{kInvalidArgument} when generated_len is 0.
CoverageDensity ComputeCoverageDensity(std::span<const Fragment> fragments,
                                       std::size_t generated_len);

struct ExtractivenessReport {
  std::size_t generated_tokens = 0;
  std::map<std::string, CoverageDensity> per_feature;
};

}  // namespace litreview::metrics

#endif  // LITREVIEW_METRICS_EXTRACTIVENESS_H_
