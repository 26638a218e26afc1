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

#include "litreview/metrics/kendall.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "litreview/error.h"

namespace litreview::metrics {
namespace {

using Pair = std::pair<double, double>;

std::int64_t TiedPairs(std::int64_t run) { return run * (run - 1) / 2; }

// Stable merge sort of v by .second, returning the number of swaps (pairs
// (i, j), i < j, with v[i].second > v[j].second).
std::int64_t MergeSortBySecond(std::vector<Pair>& v, std::vector<Pair>& scratch, size_t lo,
                               size_t hi) {
  if (hi - lo < 2) return 0;
  const size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = MergeSortBySecond(v, scratch, lo, mid) +
                       MergeSortBySecond(v, scratch, mid, hi);
  size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j].second < v[i].second) {
      swaps += static_cast<std::int64_t>(mid - i);
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

}  // namespace

CorrelationResult KendallTau(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument, "kendall tau: series lengths differ");
  }
  if (x.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "kendall tau: need at least two pairs");
  }
  std::vector<Pair> v(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (std::isnan(x[i]) || std::isnan(y[i])) {
      throw Error(ErrorCode::kInvalidArgument, "kendall tau: NaN observation");
    }
    v[i] = {x[i], y[i]};
  }
  std::sort(v.begin(), v.end());

  CorrelationResult r;
  r.n = v.size();
  const auto n = static_cast<std::int64_t>(v.size());
  r.total_pairs = n * (n - 1) / 2;

  std::int64_t run_x = 1, run_xy = 1;
  for (size_t i = 1; i < v.size(); ++i) {
    const bool same_x = v[i].first == v[i - 1].first;
    const bool same_xy = same_x && v[i].second == v[i - 1].second;
    if (same_x) {
      ++run_x;
    } else {
      r.x_tied_pairs += TiedPairs(run_x);
      run_x = 1;
    }
    if (same_xy) {
      ++run_xy;
    } else {
      r.joint_tied_pairs += TiedPairs(run_xy);
      run_xy = 1;
    }
  }
  r.x_tied_pairs += TiedPairs(run_x);
  r.joint_tied_pairs += TiedPairs(run_xy);

  std::vector<Pair> scratch(v.size());
  const std::int64_t swaps = MergeSortBySecond(v, scratch, 0, v.size());

  std::int64_t run_y = 1;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i].second == v[i - 1].second) {
      ++run_y;
    } else {
      r.y_tied_pairs += TiedPairs(run_y);
      run_y = 1;
    }
  }
  r.y_tied_pairs += TiedPairs(run_y);

  r.concordant_minus_discordant =
      r.total_pairs - r.x_tied_pairs - r.y_tied_pairs + r.joint_tied_pairs - 2 * swaps;
  const std::int64_t denom_x = r.total_pairs - r.x_tied_pairs;
  const std::int64_t denom_y = r.total_pairs - r.y_tied_pairs;
  if (denom_x == 0 || denom_y == 0) {
    r.defined = false;
    r.tau = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  r.defined = true;
  r.tau = static_cast<double>(r.concordant_minus_discordant) /
          std::sqrt(static_cast<double>(denom_x) * static_cast<double>(denom_y));
  return r;
}

}  // namespace litreview::metrics
