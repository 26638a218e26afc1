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

#include "litreview/llm/client.h"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "litreview/error.h"
#include "litreview/llm/tokens.h"

namespace litreview::llm {
namespace {

bool Retryable(int status) { return status == 429 || status >= 500; }

class SemaphoreGuard {
 public:
  explicit SemaphoreGuard(std::counting_semaphore<1024>& sem) : sem_(sem) { sem_.acquire(); }
  ~SemaphoreGuard() { sem_.release(); }
  SemaphoreGuard(const SemaphoreGuard&) = delete;
  SemaphoreGuard& operator=(const SemaphoreGuard&) = delete;

 private:
  std::counting_semaphore<1024>& sem_;
};

}  // namespace

LlmClient::LlmClient(BackendProfile profile, ClientOptions options)
    : profile_(std::move(profile)),
      options_(std::move(options)),
      in_flight_(std::clamp(options_.max_in_flight, 1, 1024)) {
  if (profile_.input_token_budget <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "input token budget must be positive");
  }
  if (!options_.sleeper) {
    options_.sleeper = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
  if (profile_.kind == BackendKind::kScripted && !options_.script) {
    options_.script = LoadScript(profile_.endpoint);
  }
}

ChatRequest LlmClient::MakeRequest(std::string user_content) const {
  ChatRequest request;
  request.model_id = profile_.model_id;
  request.temperature = profile_.temperature;
  request.max_output_tokens = profile_.max_output_tokens;
  request.messages.push_back({Role::kUser, std::move(user_content)});
  return request;
}

ChatResponse LlmClient::Complete(const ChatRequest& request, std::string_view label) {
  ValidateRequest(request);
  const int estimate = EstimateTokens(JoinedContent(request));
  if (estimate > profile_.input_token_budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "request needs an estimated " + std::to_string(estimate) +
                    " input tokens, budget is " + std::to_string(profile_.input_token_budget),
                RequestDigest(request));
  }
  CallRecord record;
  record.label = std::string(label);
  record.request_digest = RequestDigest(request);
  record.model_id = request.model_id;
  record.backend = profile_.kind;
  const auto started = std::chrono::steady_clock::now();
  auto finish = [&](const ChatResponse* response) {
    record.latency_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    if (response) {
      record.input_tokens = response->input_token_count;
      record.output_tokens = response->output_token_count;
      record.attempts = response->attempts;
      record.finish_reason = std::string(FinishReasonName(response->finish_reason));
      if (response->finish_reason == FinishReason::kTruncated) {
        record.warning = "completion truncated at max_output_tokens";
      }
    }
    if (options_.log) options_.log->Append(record);
  };

  SemaphoreGuard guard(in_flight_);
  try {
    ChatResponse response = profile_.kind == BackendKind::kScripted
                                ? RespondScripted(request, *options_.script)
                                : CompleteRemote(request, record);
    finish(&response);
    return response;
  } catch (const Error& e) {
    record.error = e.what();
    finish(nullptr);
    throw;
  }
}

ChatResponse LlmClient::CompleteRemote(const ChatRequest& request, CallRecord& record) {
  if (!options_.transport) {
    throw Error(ErrorCode::kPrecondition, "remote backend has no transport configured");
  }
  HttpRequest http;
  http.url = profile_.endpoint;
  http.body = RequestToJson(request).dump();
  http.headers["Content-Type"] = "application/json";
  if (const char* key = std::getenv(profile_.credential_env.c_str()); key && *key) {
    http.headers["Authorization"] = std::string("Bearer ") + key;
  }
  const int max_attempts = std::max(1, profile_.retry.max_attempts);
  std::string last_failure;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    if (attempt > 1) {
      auto delay = profile_.retry.DelayBeforeRetry(attempt - 2);
      record.backoff_ms.push_back(delay.count());
      options_.sleeper(delay);
    }
    record.attempts = attempt;
    HttpResponse http_response;
    try {
      http_response = options_.transport->Post(http);
    } catch (const TransportError& e) {
      last_failure = e.what();
      continue;
    }
    if (Retryable(http_response.status)) {
      last_failure = "HTTP " + std::to_string(http_response.status);
      continue;
    }
    if (http_response.status < 200 || http_response.status >= 300) {
      throw Error(ErrorCode::kBackend,
                  "backend rejected request with HTTP " + std::to_string(http_response.status),
                  http_response.body);
    }
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(http_response.body);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kBackend, std::string("malformed backend response: ") + e.what(),
                  http_response.body);
    }
    ChatResponse response;
    try {
      const auto& choice = body.at("choices").at(0);
      response.content = choice.at("message").at("content").get<std::string>();
      if (choice.value("finish_reason", std::string("stop")) == "length") {
        response.finish_reason = FinishReason::kTruncated;
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kBackend, std::string("backend response lacks content: ") + e.what(),
                  http_response.body);
    }
    const nlohmann::json usage = body.value("usage", nlohmann::json::object());
    response.input_token_count =
        usage.value("prompt_tokens", EstimateTokens(JoinedContent(request)));
    response.output_token_count =
        usage.value("completion_tokens", EstimateTokens(response.content));
    response.attempts = attempt;
    return response;
  }
  throw Error(ErrorCode::kBackend,
              "backend failed after " + std::to_string(max_attempts) + " attempts: " +
                  last_failure,
              last_failure);
}

}  // namespace litreview::llm
