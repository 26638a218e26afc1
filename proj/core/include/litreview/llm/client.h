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

#ifndef LITREVIEW_LLM_CLIENT_H_
#define LITREVIEW_LLM_CLIENT_H_

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <semaphore>
#include <string>

#include "litreview/llm/call_log.h"
#include "litreview/llm/scripted.h"
#include "litreview/llm/transport.h"
#include "litreview/llm/types.h"

namespace litreview::llm {

using Sleeper = std::function<void(std::chrono::milliseconds)>;

struct ClientOptions {
  std::shared_ptr<Transport> transport;  // required for remote profiles
  std::shared_ptr<CallLog> log;          // optional
  Sleeper sleeper;                       // defaults to this_thread::sleep_for
  int max_in_flight = 4;
  // Pre-loaded script for scripted profiles; loaded from profile.endpoint
  // when absent.
  std::optional<Script> script;
};

// Chat-completion client. Shareable across threads.
class LlmClient {
 public:
  LlmClient(BackendProfile profile, ClientOptions options);

  // Budget gate, then completion. Over-budget requests throw
  // Error{kBudgetExceeded} before the transport is touched. Remote calls retry
  // transport errors, 429 and 5xx with exponential backoff.
  ChatResponse Complete(const ChatRequest& request, std::string_view label = "");

  // Builds a single-user-message request with the profile's model settings.
  ChatRequest MakeRequest(std::string user_content) const;

  const BackendProfile& profile() const { return profile_; }
  const std::shared_ptr<CallLog>& log() const { return options_.log; }

 private:
  ChatResponse CompleteRemote(const ChatRequest& request, CallRecord& record);

  BackendProfile profile_;
  ClientOptions options_;
  std::counting_semaphore<1024> in_flight_;
};

}  // namespace litreview::llm

#endif  // LITREVIEW_LLM_CLIENT_H_
