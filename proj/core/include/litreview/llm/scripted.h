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

#ifndef LITREVIEW_LLM_SCRIPTED_H_
#define LITREVIEW_LLM_SCRIPTED_H_

#include <filesystem>
#include <map>
#include <string>

#include "litreview/llm/types.h"

namespace litreview::llm {

enum class DefaultTransform {
  kNone,
  // First 40 characters (code points) of the last user message.
  kEchoPrefix,
  // Well-formed, deterministic answers to each prompt template; lets the
  // whole pipeline run offline.
  kSynthetic,
};

struct Script {
  std::map<std::string, std::string> responses;  // request digest -> text
  DefaultTransform fallback = DefaultTransform::kNone;
};

// {"default": "none" | "echo40" | "synthetic", "responses": {digest: text}}
Script LoadScript(const std::filesystem::path& path);
Script ScriptFromJson(const nlohmann::json& j);

// Pure function of (request, script). Throws Error{kNotFound} naming the
// digest when the script has neither a mapping nor a default.
ChatResponse RespondScripted(const ChatRequest& request, const Script& script);

}  // namespace litreview::llm

#endif  // LITREVIEW_LLM_SCRIPTED_H_
