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

#ifndef LITREVIEW_METRICS_TOKENIZE_H_
#define LITREVIEW_METRICS_TOKENIZE_H_

#include <string>
#include <string_view>
#include <vector>

namespace litreview::metrics {

// Shared by ROUGE, extractive fragments and CTS scoring so their scores
// compose. ASCII letters are lower-cased; every run of bytes that are neither
// ASCII alphanumerics nor non-ASCII (UTF-8) bytes separates tokens. No
// stemming, no stopword removal.
std::vector<std::string> TokenizeForMetrics(std::string_view text);

}  // namespace litreview::metrics

#endif  // LITREVIEW_METRICS_TOKENIZE_H_
