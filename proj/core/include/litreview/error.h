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

#ifndef LITREVIEW_ERROR_H_
#define LITREVIEW_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace litreview {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kNotFound,
  kPrecondition,
  kBudgetExceeded,
  kBackend,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

/// Exception type thrown by every module. `detail` carries auxiliary payload
/// such as the raw completion that failed to parse or the offending cache key.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace litreview

#endif  // LITREVIEW_ERROR_H_
