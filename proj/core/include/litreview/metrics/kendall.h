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

#ifndef LITREVIEW_METRICS_KENDALL_H_
#define LITREVIEW_METRICS_KENDALL_H_

#include <cstddef>
#include <cstdint>
#include <span>

namespace litreview::metrics {

struct CorrelationResult {
  // NaN when undefined (one series entirely tied).
  double tau = 0.0;
  bool defined = false;
  std::size_t n = 0;
  std::int64_t total_pairs = 0;                 // n(n-1)/2
  std::int64_t concordant_minus_discordant = 0;
  std::int64_t x_tied_pairs = 0;
  std::int64_t y_tied_pairs = 0;
  std::int64_t joint_tied_pairs = 0;
};

// Kendall's tau-b, (C - D) / sqrt((N - Tx)(N - Ty)), computed in O(n log n)
// with Knight's merge-sort algorithm. Throws Error{kInvalidArgument} on
// length mismatch, fewer than two pairs, or NaN input.
CorrelationResult KendallTau(std::span<const double> x, std::span<const double> y);

}  // namespace litreview::metrics

#endif  // LITREVIEW_METRICS_KENDALL_H_
