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

#ifndef LITREVIEW_LLM_TYPES_H_
#define LITREVIEW_LLM_TYPES_H_

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace litreview::llm {

enum class Role { kSystem, kUser };

struct ChatMessage {
  Role role = Role::kUser;
  std::string content;
};

struct ChatRequest {
  std::string model_id;
  std::vector<ChatMessage> messages;
  double temperature = 0.0;
  int max_output_tokens = 1024;
};

enum class FinishReason { kCompleted, kTruncated };

struct ChatResponse {
  std::string content;
  int input_token_count = 0;
  int output_token_count = 0;
  FinishReason finish_reason = FinishReason::kCompleted;
  int attempts = 1;
};

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds backoff_base{500};
  std::chrono::milliseconds backoff_max{30000};

  // Delay before retry number `retry` (0-based): min(base * 2^retry, max).
  std::chrono::milliseconds DelayBeforeRetry(int retry) const;
};

enum class BackendKind { kRemote, kScripted };

struct BackendProfile {
  BackendKind kind = BackendKind::kScripted;
  std::string model_id;
  // Chat-completion URL for remote backends, script file for scripted ones.
  std::string endpoint;
  // Name of the environment variable holding the API key.
  std::string credential_env = "OPENAI_API_KEY";
  int input_token_budget = 8000;
  int max_output_tokens = 1024;
  double temperature = 0.0;
  RetryPolicy retry;
  std::string template_version = "v1";
};

std::string_view RoleName(Role role);
std::string_view FinishReasonName(FinishReason reason);

// Throws Error{kInvalidArgument} unless the request has a user message and a
// non-negative temperature.
void ValidateRequest(const ChatRequest& request);

// Canonical JSON used both on the wire and for request digests.
nlohmann::json RequestToJson(const ChatRequest& request);

// SHA-256 of the canonical request JSON; stable across processes.
std::string RequestDigest(const ChatRequest& request);

// Concatenation of all message contents, the text the budget applies to.
std::string JoinedContent(const ChatRequest& request);

// Content of the last user message, or "".
std::string_view LastUserMessage(const ChatRequest& request);

BackendProfile ProfileFromJson(const nlohmann::json& j);
nlohmann::json ProfileToJson(const BackendProfile& profile);

}  // namespace litreview::llm

#endif  // LITREVIEW_LLM_TYPES_H_
