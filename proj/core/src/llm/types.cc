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

#include "litreview/llm/types.h"

#include <algorithm>

#include "litreview/digest.h"
#include "litreview/error.h"

namespace litreview::llm {

std::chrono::milliseconds RetryPolicy::DelayBeforeRetry(int retry) const {
  const int shift = std::clamp(retry, 0, 30);
  const auto scaled = backoff_base.count() * (std::int64_t{1} << shift);
  return std::chrono::milliseconds(std::min<std::int64_t>(scaled, backoff_max.count()));
}

std::string_view RoleName(Role role) { return role == Role::kSystem ? "system" : "user"; }

std::string_view FinishReasonName(FinishReason reason) {
  return reason == FinishReason::kCompleted ? "completed" : "truncated";
}

void ValidateRequest(const ChatRequest& request) {
  const bool has_user = std::any_of(request.messages.begin(), request.messages.end(),
                                    [](const auto& m) { return m.role == Role::kUser; });
  if (!has_user) {
    throw Error(ErrorCode::kInvalidArgument, "chat request needs at least one user message");
  }
  if (!(request.temperature >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "chat request temperature must be >= 0");
  }
}

nlohmann::json RequestToJson(const ChatRequest& request) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& m : request.messages) {
    messages.push_back({{"role", RoleName(m.role)}, {"content", m.content}});
  }
  return {{"model", request.model_id},
          {"messages", std::move(messages)},
          {"temperature", request.temperature},
          {"max_tokens", request.max_output_tokens}};
}

std::string RequestDigest(const ChatRequest& request) {
  return Sha256Hex(RequestToJson(request).dump());
}

std::string JoinedContent(const ChatRequest& request) {
  std::string out;
  for (const auto& m : request.messages) out += m.content;
  return out;
}

std::string_view LastUserMessage(const ChatRequest& request) {
  for (auto it = request.messages.rbegin(); it != request.messages.rend(); ++it) {
    if (it->role == Role::kUser) return it->content;
  }
  return {};
}

BackendProfile ProfileFromJson(const nlohmann::json& j) {
  BackendProfile p;
  const std::string kind = j.value("kind", std::string("scripted"));
  if (kind == "remote") {
    p.kind = BackendKind::kRemote;
  } else if (kind == "scripted") {
    p.kind = BackendKind::kScripted;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown backend kind '" + kind + "'");
  }
  p.model_id = j.value("model_id", std::string());
  p.endpoint = j.value("endpoint", j.value("script", std::string()));
  p.credential_env = j.value("credential_env", p.credential_env);
  p.input_token_budget = j.value("input_token_budget", p.input_token_budget);
  p.max_output_tokens = j.value("max_output_tokens", p.max_output_tokens);
  p.temperature = j.value("temperature", p.temperature);
  p.retry.max_attempts = j.value("max_attempts", p.retry.max_attempts);
  p.retry.backoff_base =
      std::chrono::milliseconds(j.value("backoff_base_ms", p.retry.backoff_base.count()));
  p.retry.backoff_max =
      std::chrono::milliseconds(j.value("backoff_max_ms", p.retry.backoff_max.count()));
  p.template_version = j.value("template_version", p.template_version);
  if (p.input_token_budget <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "input_token_budget must be > 0");
  }
  if (p.retry.max_attempts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_attempts must be >= 1");
  }
  if (p.model_id.empty()) throw Error(ErrorCode::kInvalidArgument, "profile needs a model_id");
  return p;
}

nlohmann::json ProfileToJson(const BackendProfile& p) {
  return {{"kind", p.kind == BackendKind::kRemote ? "remote" : "scripted"},
          {"model_id", p.model_id},
          {"endpoint", p.endpoint},
          {"credential_env", p.credential_env},
          {"input_token_budget", p.input_token_budget},
          {"max_output_tokens", p.max_output_tokens},
          {"temperature", p.temperature},
          {"max_attempts", p.retry.max_attempts},
          {"backoff_base_ms", p.retry.backoff_base.count()},
          {"backoff_max_ms", p.retry.backoff_max.count()},
          {"template_version", p.template_version}};
}

}  // namespace litreview::llm
