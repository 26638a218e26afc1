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

#include "litreview/llm/tokens.h"

#include <cstddef>

namespace litreview::llm {

int EstimateTokens(std::string_view text) {
  std::size_t chars = 0;
  for (char c : text) {
    // Continuation bytes (10xxxxxx) do not start a new character.
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++chars;
  }
  return static_cast<int>((chars + 3) / 4);
}

}  // namespace litreview::llm
