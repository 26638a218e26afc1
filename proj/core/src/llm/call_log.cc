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

#include "litreview/llm/call_log.h"

namespace litreview::llm {

void CallLog::Append(CallRecord record) {
  std::lock_guard<std::mutex> lock(mu_);
  records_.push_back(std::move(record));
}

std::vector<CallRecord> CallLog::Snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_;
}

std::size_t CallLog::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_.size();
}

nlohmann::json CallRecordToJson(const CallRecord& record) {
  nlohmann::json j = {
      {"label", record.label},
      {"request_digest", record.request_digest},
      {"model_id", record.model_id},
      {"backend", record.backend == BackendKind::kRemote ? "remote" : "scripted"},
      {"input_tokens", record.input_tokens},
      {"output_tokens", record.output_tokens},
      {"attempts", record.attempts},
      {"backoff_ms", record.backoff_ms},
      {"finish_reason", record.finish_reason},
  };
  if (!record.warning.empty()) j["warning"] = record.warning;
  if (!record.error.empty()) j["error"] = record.error;
  return j;
}

}  // namespace litreview::llm
