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

#ifndef LITREVIEW_METRICS_ROUGE_H_
#define LITREVIEW_METRICS_ROUGE_H_

#include <span>
#include <string>

namespace litreview::metrics {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// f1 is 0 when precision + recall is 0, else their harmonic mean.
RougeScore MakeRougeScore(double precision, double recall);

// Clipped n-gram overlap. recall = overlap / |reference n-grams|,
// precision = overlap / |candidate n-grams|. If either side has no n-grams
// the score is all zeros. Requires n >= 1.
RougeScore RougeN(std::span<const std::string> candidate,
                  std::span<const std::string> reference, int n);

// Longest common subsequence over the whole token sequences.
RougeScore RougeL(std::span<const std::string> candidate,
                  std::span<const std::string> reference);

std::size_t LcsLength(std::span<const std::string> a, std::span<const std::string> b);

}  // namespace litreview::metrics

#endif  // LITREVIEW_METRICS_ROUGE_H_
