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

#include <httplib.h>

#include <regex>

#include "litreview/error.h"
#include "litreview/llm/transport.h"

namespace litreview::llm {
namespace {

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

ParsedUrl ParseUrl(const std::string& url) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, kUrl)) {
    throw Error(ErrorCode::kInvalidArgument, "unsupported endpoint URL '" + url + "'");
  }
  return {m[1].str(), m[2].matched ? m[2].str() : "/"};
}

class HttpTransport : public Transport {
 public:
  explicit HttpTransport(std::chrono::seconds timeout) : timeout_(timeout) {}

  HttpResponse Post(const HttpRequest& request) override {
    const ParsedUrl url = ParseUrl(request.url);
    httplib::Client client(url.origin);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);
    httplib::Headers headers;
    std::string content_type = "application/json";
    for (const auto& [k, v] : request.headers) {
      if (k == "Content-Type") {
        content_type = v;
      } else {
        headers.emplace(k, v);
      }
    }
    auto result = client.Post(url.path, headers, request.body, content_type);
    if (!result) {
      throw TransportError("HTTP request to " + url.origin + " failed: " +
                           httplib::to_string(result.error()));
    }
    return HttpResponse{result->status, result->body};
  }

 private:
  std::chrono::seconds timeout_;
};

}  // namespace

std::shared_ptr<Transport> MakeHttpTransport(std::chrono::seconds timeout) {
  return std::make_shared<HttpTransport>(timeout);
}

HttpResponse RecordingTransport::Post(const HttpRequest& request) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    requests_.push_back(request);
  }
  if (!inner_) throw TransportError("recording transport has no network access");
  return inner_->Post(request);
}

std::size_t RecordingTransport::call_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return requests_.size();
}

std::vector<HttpRequest> RecordingTransport::requests() const {
  std::lock_guard<std::mutex> lock(mu_);
  return requests_;
}

}  // namespace litreview::llm
