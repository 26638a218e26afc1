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

#ifndef LITREVIEW_LLM_SYNTHETIC_RESPONDER_H_
#define LITREVIEW_LLM_SYNTHETIC_RESPONDER_H_

#include <string>
#include <string_view>

namespace litreview::llm {

// Deterministic stand-in completion for the pipeline's prompt templates:
// faceted summaries, pair relations, usage summaries, main ideas and related
// work drafts built from the prompt's own fields. Unknown prompts get a short
// echo.
std::string SyntheticCompletion(std::string_view prompt);

}  // namespace litreview::llm

#endif  // LITREVIEW_LLM_SYNTHETIC_RESPONDER_H_
