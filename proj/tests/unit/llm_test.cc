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


#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "litreview/error.h"
#include "litreview/llm/call_log.h"
#include "litreview/llm/client.h"
#include "litreview/llm/scripted.h"
#include "litreview/llm/tokens.h"
#include "litreview/llm/transport.h"
#include "litreview/llm/types.h"
#include "litreview/parallel.h"

namespace litreview::llm {
namespace {

using std::chrono::milliseconds;

ChatRequest UserRequest(std::string content, std::string model = "m") {
  ChatRequest r;
  r.model_id = std::move(model);
  r.messages = {{Role::kUser, std::move(content)}};
  return r;
}

HttpResponse Ok(const std::string& content, const std::string& finish = "stop") {
  nlohmann::json body = {
      {"choices", {{{"message", {{"role", "assistant"}, {"content", content}}},
                    {"finish_reason", finish}}}},
      {"usage", {{"prompt_tokens", 12}, {"completion_tokens", 3}}}};
  return {200, body.dump()};
}

BackendProfile Remote(int max_attempts = 3) {
  BackendProfile p;
  p.kind = BackendKind::kRemote;
  p.model_id = "gpt-4";
  p.endpoint = "http://localhost:1/v1/chat/completions";
  p.credential_env = "LITREVIEW_TEST_KEY";
  p.retry.max_attempts = max_attempts;
  p.retry.backoff_base = milliseconds(100);
  p.retry.backoff_max = milliseconds(250);
  return p;
}

ClientOptions Options(std::shared_ptr<Transport> transport, std::shared_ptr<CallLog> log,
                      std::vector<milliseconds>* slept = nullptr) {
  ClientOptions o;
  o.transport = std::move(transport);
  o.log = std::move(log);
  o.sleeper = [slept](milliseconds d) {
    if (slept) slept->push_back(d);
  };
  return o;
}

TEST(EstimateTokens, DeclaredHeuristic) {
  EXPECT_EQ(EstimateTokens(""), 0);
  EXPECT_EQ(EstimateTokens(std::string(400, 'a')), 100);
  EXPECT_EQ(EstimateTokens(std::string(401, 'a')), 101);
  EXPECT_EQ(EstimateTokens("é"), 1);            // one code point, two bytes
  EXPECT_EQ(EstimateTokens("éééé"), 1);         // four code points
}

TEST(EstimateTokens, MonotoneUnderConcatenation) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const std::string a(rng() % 50, 'x');
    const std::string b(rng() % 50, 'y');
    EXPECT_GE(EstimateTokens(a + b), std::max(EstimateTokens(a), EstimateTokens(b)));
  }
}

TEST(ValidateRequest, Invariants) {
  ChatRequest no_user;
  no_user.model_id = "m";
  no_user.messages = {{Role::kSystem, "s"}};
  EXPECT_THROW(ValidateRequest(no_user), Error);
  auto negative = UserRequest("x");
  negative.temperature = -0.1;
  EXPECT_THROW(ValidateRequest(negative), Error);
  EXPECT_NO_THROW(ValidateRequest(UserRequest("x")));
}

TEST(RequestDigest, StableAndSensitive) {
  EXPECT_EQ(RequestDigest(UserRequest("a")), RequestDigest(UserRequest("a")));
  EXPECT_NE(RequestDigest(UserRequest("a")), RequestDigest(UserRequest("b")));
  EXPECT_NE(RequestDigest(UserRequest("a", "m1")), RequestDigest(UserRequest("a", "m2")));
  EXPECT_EQ(RequestDigest(UserRequest("a")).size(), 64u);
}

TEST(RetryPolicy, BackoffDoublesUpToCap) {
  RetryPolicy p;
  p.backoff_base = milliseconds(100);
  p.backoff_max = milliseconds(250);
  EXPECT_EQ(p.DelayBeforeRetry(0), milliseconds(100));
  EXPECT_EQ(p.DelayBeforeRetry(1), milliseconds(200));
  EXPECT_EQ(p.DelayBeforeRetry(2), milliseconds(250));
  EXPECT_EQ(p.DelayBeforeRetry(40), milliseconds(250));
}

TEST(RespondScripted, ExactDigestHit) {
  const auto req = UserRequest("hello");
  Script s;
  s.responses[RequestDigest(req)] = "OK";
  const auto r = RespondScripted(req, s);
  EXPECT_EQ(r.content, "OK");
  EXPECT_EQ(r.finish_reason, FinishReason::kCompleted);
}

TEST(RespondScripted, EchoDefaultIsDeterministic) {
  Script s;
  s.fallback = DefaultTransform::kEchoPrefix;
  const std::string text = "0123456789012345678901234567890123456789-tail";
  EXPECT_EQ(RespondScripted(UserRequest(text), s).content, text.substr(0, 40));
  EXPECT_EQ(RespondScripted(UserRequest("short"), s).content, "short");
}

TEST(RespondScripted, UnmatchedWithoutDefaultListsTheDigest) {
  const auto req = UserRequest("nobody scripted this");
  try {
    RespondScripted(req, Script{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
    EXPECT_NE(std::string(e.what()).find(RequestDigest(req)), std::string::npos);
    EXPECT_EQ(e.detail(), RequestDigest(req));
  }
}

TEST(ScriptFromJson, ParsesDefaultsAndResponses) {
  const auto s = ScriptFromJson({{"default", "echo40"}, {"responses", {{"abc", "x"}}}});
  EXPECT_EQ(s.fallback, DefaultTransform::kEchoPrefix);
  EXPECT_EQ(s.responses.at("abc"), "x");
  EXPECT_EQ(ScriptFromJson({{"default", "synthetic"}}).fallback, DefaultTransform::kSynthetic);
  EXPECT_THROW(ScriptFromJson({{"default", "telepathy"}}), Error);
}

TEST(LlmClient, ScriptedProfileAnswersAndLogs) {
  BackendProfile p;
  p.model_id = "m";
  auto log = std::make_shared<CallLog>();
  auto opts = Options(nullptr, log);
  const auto req = UserRequest("ping");
  opts.script = Script{{{RequestDigest(req), "OK"}}, DefaultTransform::kNone};
  LlmClient client(p, opts);
  EXPECT_EQ(client.Complete(req, "unit").content, "OK");
  ASSERT_EQ(log->size(), 1u);
  const auto rec = log->Snapshot()[0];
  EXPECT_EQ(rec.label, "unit");
  EXPECT_EQ(rec.request_digest, RequestDigest(req));
  EXPECT_EQ(rec.attempts, 1);
  EXPECT_EQ(CallRecordToJson(rec).count("latency_ms"), 0u);
}

TEST(LlmClient, OverBudgetByOneNeverReachesTheWire) {
  auto recorder = std::make_shared<RecordingTransport>();
  auto log = std::make_shared<CallLog>();
  auto profile = Remote();
  profile.input_token_budget = 10;
  LlmClient client(profile, Options(recorder, log));
  try {
    client.Complete(UserRequest(std::string(41, 'a')));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  EXPECT_EQ(recorder->call_count(), 0u);
  EXPECT_EQ(log->size(), 0u);
}

TEST(LlmClient, RetriesTransientFailuresThenSucceeds) {
  int calls = 0;
  auto flaky = std::make_shared<FunctionTransport>([&](const HttpRequest&) -> HttpResponse {
    ++calls;
    if (calls == 1) throw TransportError("connection reset");
    if (calls == 2) return {503, "busy"};
    return Ok("fine");
  });
  auto log = std::make_shared<CallLog>();
  std::vector<milliseconds> slept;
  LlmClient client(Remote(3), Options(flaky, log, &slept));
  const auto r = client.Complete(UserRequest("q"));
  EXPECT_EQ(r.content, "fine");
  EXPECT_EQ(r.attempts, 3);
  EXPECT_EQ(r.input_token_count, 12);
  EXPECT_EQ(r.output_token_count, 3);
  EXPECT_EQ(slept, (std::vector<milliseconds>{milliseconds(100), milliseconds(200)}));
  const auto rec = log->Snapshot().at(0);
  EXPECT_EQ(rec.attempts, 3);
  EXPECT_EQ(rec.backoff_ms, (std::vector<long long>{100, 200}));
}

TEST(LlmClient, ExhaustedRetriesCarryTheLastStatus) {
  auto busy = std::make_shared<FunctionTransport>(
      [](const HttpRequest&) -> HttpResponse { return {429, "slow down"}; });
  std::vector<milliseconds> slept;
  auto log = std::make_shared<CallLog>();
  LlmClient client(Remote(4), Options(busy, log, &slept));
  try {
    client.Complete(UserRequest("q"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBackend);
    EXPECT_NE(std::string(e.what()).find("HTTP 429"), std::string::npos);
  }
  ASSERT_EQ(slept.size(), 3u);
  EXPECT_TRUE(std::is_sorted(slept.begin(), slept.end()));
  EXPECT_FALSE(log->Snapshot().at(0).error.empty());
}

TEST(LlmClient, ClientErrorsAreNotRetried) {
  int calls = 0;
  auto bad = std::make_shared<FunctionTransport>([&](const HttpRequest&) -> HttpResponse {
    ++calls;
    return {400, "bad request"};
  });
  LlmClient client(Remote(3), Options(bad, nullptr));
  EXPECT_THROW(client.Complete(UserRequest("q")), Error);
  EXPECT_EQ(calls, 1);
}

TEST(LlmClient, TruncatedFinishSurfacesAWarning) {
  auto t = std::make_shared<FunctionTransport>(
      [](const HttpRequest&) { return Ok("partial", "length"); });
  auto log = std::make_shared<CallLog>();
  LlmClient client(Remote(), Options(t, log));
  EXPECT_EQ(client.Complete(UserRequest("q")).finish_reason, FinishReason::kTruncated);
  EXPECT_FALSE(log->Snapshot().at(0).warning.empty());
}

TEST(LlmClient, WireFormatAndCredentials) {
  ::setenv("LITREVIEW_TEST_KEY", "secret-token", 1);
  auto inner = std::make_shared<FunctionTransport>([](const HttpRequest&) { return Ok("x"); });
  auto recorder = std::make_shared<RecordingTransport>(inner);
  LlmClient client(Remote(), Options(recorder, nullptr));
  auto req = client.MakeRequest("hello");
  client.Complete(req);
  ::unsetenv("LITREVIEW_TEST_KEY");
  ASSERT_EQ(recorder->call_count(), 1u);
  const auto sent = recorder->requests()[0];
  EXPECT_EQ(sent.url, "http://localhost:1/v1/chat/completions");
  EXPECT_EQ(sent.headers.at("Authorization"), "Bearer secret-token");
  const auto body = nlohmann::json::parse(sent.body);
  EXPECT_EQ(body["model"], "gpt-4");
  EXPECT_EQ(body["messages"][0]["role"], "user");
  EXPECT_EQ(body["messages"][0]["content"], "hello");
  EXPECT_EQ(body["temperature"], 0.0);
  EXPECT_TRUE(body.contains("max_tokens"));
}

TEST(LlmClient, RemoteWithoutTransportIsAPreconditionError) {
  LlmClient client(Remote(), Options(nullptr, nullptr));
  try {
    client.Complete(UserRequest("q"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(LlmClient, InFlightLimitIsEnforced) {
  std::atomic<int> current{0};
  std::atomic<int> peak{0};
  auto slow = std::make_shared<FunctionTransport>([&](const HttpRequest&) {
    const int now = ++current;
    int seen = peak.load();
    while (now > seen && !peak.compare_exchange_weak(seen, now)) {
    }
    std::this_thread::sleep_for(milliseconds(5));
    --current;
    return Ok("x");
  });
  auto opts = Options(slow, nullptr);
  opts.max_in_flight = 2;
  LlmClient client(Remote(), opts);
  ParallelFor(16, 8, [&](std::size_t i) {
    client.Complete(UserRequest("q" + std::to_string(i)));
  });
  EXPECT_LE(peak.load(), 2);
  EXPECT_GE(peak.load(), 1);
}

TEST(LlmClient, RejectsNonPositiveBudget) {
  auto p = Remote();
  p.input_token_budget = 0;
  EXPECT_THROW(LlmClient(p, Options(nullptr, nullptr)), Error);
}

TEST(RecordingTransport, WithoutInnerFailsAsTransient) {
  RecordingTransport t;
  EXPECT_THROW(t.Post({"u", {}, "b"}), TransportError);
  EXPECT_EQ(t.call_count(), 1u);
}

TEST(ProfileFromJson, DefaultsAndValidation) {
  const auto p = ProfileFromJson({{"model_id", "gpt-4"}});
  EXPECT_EQ(p.kind, BackendKind::kScripted);
  EXPECT_EQ(p.input_token_budget, 8000);
  EXPECT_EQ(p.temperature, 0.0);
  EXPECT_THROW(ProfileFromJson({{"model_id", "m"}, {"input_token_budget", 0}}), Error);
  EXPECT_THROW(ProfileFromJson({{"kind", "carrier-pigeon"}, {"model_id", "m"}}), Error);
  EXPECT_THROW(ProfileFromJson(nlohmann::json::object()), Error);
  const auto round = ProfileFromJson(ProfileToJson(Remote()));
  EXPECT_EQ(round.kind, BackendKind::kRemote);
  EXPECT_EQ(round.retry.max_attempts, 3);
}

TEST(ParallelFor, RethrowsLowestFailingIndex) {
  try {
    ParallelFor(50, 4, [](std::size_t i) {
      if (i == 7 || i == 30) throw std::runtime_error("fail " + std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "fail 7");
  }
}

}  // namespace
}  // namespace litreview::llm
