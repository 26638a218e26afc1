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

#include "litreview/pipeline/evaluate.h"

#include <cstdio>

#include "litreview/error.h"
#include "litreview/metrics/tokenize.h"

namespace litreview::pipeline {
namespace {

// Never produced by the tokenizer, so fragments stop at text boundaries.
constexpr std::string_view kSeparator = "\x1f";

nlohmann::json ScoreJson(const metrics::RougeScore& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

metrics::ExtractivenessReport ComputeExtractiveness(std::string_view generated,
                                                    const FeatureTexts& features) {
  metrics::ExtractivenessReport report;
  const auto gen = metrics::TokenizeForMetrics(generated);
  report.generated_tokens = gen.size();
  if (gen.empty()) return report;
  for (const auto& [name, texts] : features) {
    std::vector<std::string> source;
    for (const auto& t : texts) {
      if (!source.empty()) source.emplace_back(kSeparator);
      auto toks = metrics::TokenizeForMetrics(t);
      source.insert(source.end(), toks.begin(), toks.end());
    }
    const auto fragments = metrics::ExtractiveFragments(source, gen);
    report.per_feature[name] = metrics::ComputeCoverageDensity(fragments, gen.size());
  }
  return report;
}

MetricsReport EvaluateRun(const std::map<std::string, std::string>& outputs,
                          const std::optional<std::string>& gold, const FeatureTexts& features,
                          std::span<const CorrelationInput> correlations) {
  MetricsReport report;
  const bool have_gold = gold && !metrics::TokenizeForMetrics(*gold).empty();
  if (!have_gold) report.warnings.push_back("no related work text; ROUGE rows skipped");
  const auto gold_tokens = have_gold ? metrics::TokenizeForMetrics(*gold)
                                     : std::vector<std::string>{};
  for (const auto& [variant, text] : outputs) {
    VariantMetrics vm;
    vm.variant_id = variant;
    const auto tokens = metrics::TokenizeForMetrics(text);
    if (have_gold) {
      vm.rouge1 = metrics::RougeN(tokens, gold_tokens, 1);
      vm.rouge2 = metrics::RougeN(tokens, gold_tokens, 2);
      vm.rougeL = metrics::RougeL(tokens, gold_tokens);
    }
    if (tokens.empty()) {
      report.warnings.push_back("variant " + variant + " output is empty; no extractiveness");
    }
    vm.extractiveness = ComputeExtractiveness(text, features);
    report.variants.push_back(std::move(vm));
  }
  for (const auto& c : correlations) {
    try {
      report.correlations.push_back({c.name, metrics::KendallTau(c.x, c.y)});
    } catch (const Error& e) {
      report.warnings.push_back("correlation '" + c.name + "': " + e.what());
    }
  }
  return report;
}

nlohmann::json MetricsToJson(const MetricsReport& report) {
  nlohmann::json variants = nlohmann::json::object();
  for (const auto& v : report.variants) {
    nlohmann::json j;
    if (v.rouge1) {
      j["rouge1"] = ScoreJson(*v.rouge1);
      j["rouge2"] = ScoreJson(*v.rouge2);
      j["rougeL"] = ScoreJson(*v.rougeL);
    }
    nlohmann::json ext = nlohmann::json::object();
    for (const auto& [name, cd] : v.extractiveness.per_feature) {
      ext[name] = {{"coverage", cd.coverage}, {"density", cd.density}};
    }
    j["generated_tokens"] = v.extractiveness.generated_tokens;
    j["extractiveness"] = ext;
    variants[v.variant_id] = j;
  }
  nlohmann::json corr = nlohmann::json::array();
  for (const auto& c : report.correlations) {
    corr.push_back({{"name", c.name},
                    {"tau", c.result.defined ? nlohmann::json(c.result.tau) : nlohmann::json()},
                    {"defined", c.result.defined},
                    {"n", c.result.n},
                    {"x_tied_pairs", c.result.x_tied_pairs},
                    {"y_tied_pairs", c.result.y_tied_pairs}});
  }
  return {{"variants", variants}, {"correlations", corr}, {"warnings", report.warnings}};
}

std::string MetricsToCsv(const MetricsReport& report) {
  std::string out = "variant,metric,feature,precision,recall,f1,coverage,density\n";
  for (const auto& v : report.variants) {
    auto rouge = [&](const char* name, const std::optional<metrics::RougeScore>& s) {
      if (!s) return;
      out += v.variant_id + "," + name + ",," + Num(s->precision) + "," + Num(s->recall) + "," +
             Num(s->f1) + ",,\n";
    };
    rouge("rouge1", v.rouge1);
    rouge("rouge2", v.rouge2);
    rouge("rougeL", v.rougeL);
    for (const auto& [name, cd] : v.extractiveness.per_feature) {
      out += v.variant_id + ",extractiveness," + name + ",,,," + Num(cd.coverage) + "," +
             Num(cd.density) + "\n";
    }
  }
  for (const auto& c : report.correlations) {
    out += ",kendall_tau," + c.name + ",,," + (c.result.defined ? Num(c.result.tau) : "") +
           ",,\n";
  }
  return out;
}

}  // namespace litreview::pipeline
