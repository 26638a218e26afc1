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

#ifndef LITREVIEW_LLM_TRANSPORT_H_
#define LITREVIEW_LLM_TRANSPORT_H_

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace litreview::llm {

struct HttpRequest {
  std::string url;
  std::map<std::string, std::string> headers;
  std::string body;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Connection-level failure (DNS, refused, timeout). Always retryable.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpResponse Post(const HttpRequest& request) = 0;
};

// cpp-httplib backed HTTPS/HTTP transport.
std::shared_ptr<Transport> MakeHttpTransport(
    std::chrono::seconds timeout = std::chrono::seconds(120));

// Records every request it sees and forwards it to `inner`; with no inner
// transport every Post throws TransportError. Used to prove that a code path
// never touches the network.
class RecordingTransport : public Transport {
 public:
  explicit RecordingTransport(std::shared_ptr<Transport> inner = nullptr)
      : inner_(std::move(inner)) {}

  HttpResponse Post(const HttpRequest& request) override;

  std::size_t call_count() const;
  std::vector<HttpRequest> requests() const;

 private:
  std::shared_ptr<Transport> inner_;
  mutable std::mutex mu_;
  std::vector<HttpRequest> requests_;
};

// Adapts a callable; handy for fault injection in tests.
class FunctionTransport : public Transport {
 public:
  explicit FunctionTransport(std::function<HttpResponse(const HttpRequest&)> fn)
      : fn_(std::move(fn)) {}
  HttpResponse Post(const HttpRequest& request) override { return fn_(request); }

 private:
  std::function<HttpResponse(const HttpRequest&)> fn_;
};

}  // namespace litreview::llm

#endif  // LITREVIEW_LLM_TRANSPORT_H_
