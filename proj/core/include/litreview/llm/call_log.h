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

#ifndef LITREVIEW_LLM_CALL_LOG_H_
#define LITREVIEW_LLM_CALL_LOG_H_

#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "litreview/llm/types.h"

namespace litreview::llm {

struct CallRecord {
  std::string label;  // stage/operation tag supplied by the caller
  std::string request_digest;
  std::string model_id;
  BackendKind backend = BackendKind::kScripted;
  int input_tokens = 0;
  int output_tokens = 0;
  int attempts = 0;
  std::vector<long long> backoff_ms;
  std::string finish_reason;
  std::string warning;
  std::string error;
  // Wall-clock; excluded from the deterministic part of the manifest.
  double latency_ms = 0.0;
};

// Thread-safe, append-only log of backend calls.
class CallLog {
 public:
  void Append(CallRecord record);
  std::vector<CallRecord> Snapshot() const;
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::vector<CallRecord> records_;
};

// Deterministic fields only.
nlohmann::json CallRecordToJson(const CallRecord& record);

}  // namespace litreview::llm

#endif  // LITREVIEW_LLM_CALL_LOG_H_
