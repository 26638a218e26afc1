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

#include "litreview/llm/scripted.h"

#include <fstream>
#include <sstream>

#include "litreview/error.h"
#include "litreview/llm/synthetic_responder.h"
#include "litreview/llm/tokens.h"

namespace litreview::llm {
namespace {

std::string Utf8Prefix(std::string_view text, size_t max_chars) {
  size_t chars = 0;
  size_t i = 0;
  for (; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      if (chars == max_chars) break;
      ++chars;
    }
  }
  return std::string(text.substr(0, i));
}

}  // namespace

Script ScriptFromJson(const nlohmann::json& j) {
  Script script;
  const std::string fallback = j.value("default", std::string("none"));
  if (fallback == "none") {
    script.fallback = DefaultTransform::kNone;
  } else if (fallback == "echo40") {
    script.fallback = DefaultTransform::kEchoPrefix;
  } else if (fallback == "synthetic") {
    script.fallback = DefaultTransform::kSynthetic;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown script default '" + fallback + "'");
  }
  if (auto it = j.find("responses"); it != j.end()) {
    for (const auto& [digest, text] : it->items()) {
      script.responses[digest] = text.get<std::string>();
    }
  }
  return script;
}

Script LoadScript(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read script " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ScriptFromJson(nlohmann::json::parse(buf.str()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, "malformed script " + path.string() + ": " + e.what());
  }
}

ChatResponse RespondScripted(const ChatRequest& request, const Script& script) {
  const std::string digest = RequestDigest(request);
  ChatResponse response;
  if (auto it = script.responses.find(digest); it != script.responses.end()) {
    response.content = it->second;
  } else {
    switch (script.fallback) {
      case DefaultTransform::kEchoPrefix:
        response.content = Utf8Prefix(LastUserMessage(request), 40);
        break;
      case DefaultTransform::kSynthetic:
        response.content = SyntheticCompletion(LastUserMessage(request));
        break;
      case DefaultTransform::kNone:
        throw Error(ErrorCode::kNotFound, "scripted backend has no response for request " + digest,
                    digest);
    }
  }
  response.input_token_count = EstimateTokens(JoinedContent(request));
  response.output_token_count = EstimateTokens(response.content);
  response.finish_reason = FinishReason::kCompleted;
  return response;
}

}  // namespace litreview::llm
