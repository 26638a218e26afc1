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

#include "litreview/pipeline/pipeline.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <tuple>

#include "litreview/cts/retrieval.h"
#include "litreview/digest.h"
#include "litreview/error.h"
#include "litreview/graph/feature_extractor.h"
#include "litreview/ingest/taic.h"
#include "litreview/prompt/chunking.h"
#include "litreview/prompt/generation.h"
#include "litreview/prompt/plan_file.h"
#include "litreview/prompt/variant.h"

namespace litreview::pipeline {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteRaw(const fs::path& path, const std::string& content) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

// Writes out_dir/rel and records its digest.
void WriteOutput(const fs::path& out_dir, const std::string& rel, const std::string& content,
                 RunManifest& manifest) {
  WriteRaw(out_dir / rel, content);
  manifest.output_digests[rel] = Sha256Hex(content);
}

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string UtcNow() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class StageTimer {
 public:
  StageTimer(RunManifest& manifest, std::string stage)
      : manifest_(manifest), stage_(std::move(stage)), start_(Clock::now()) {}
  ~StageTimer() {
    manifest_.stage_timings_ms.emplace_back(
        stage_, std::chrono::duration<double, std::milli>(Clock::now() - start_).count());
  }

 private:
  RunManifest& manifest_;
  std::string stage_;
  Clock::time_point start_;
};

std::string TaicText(const ingest::TaicBundle& taic) {
  return taic.title + "\n" + taic.abstract + "\n" + taic.introduction + "\n" + taic.conclusion;
}

struct RunContext {
  const RunConfig& config;
  const Corpus& corpus;
  const graph::CitationNetwork& network;
  const ingest::TaicBundle& taic;
  const std::optional<prompt::MainIdeaPlan>& plan;
  const std::optional<std::vector<prompt::LayoutGroup>>& layout;
  const std::vector<ingest::BibEntry>& cited_bib;
  llm::LlmClient& generator;
};

const ingest::PaperRecord* FindCited(const Corpus& corpus, std::string_view id) {
  for (const auto& r : corpus.cited) {
    if (r.paper_id == id) return &r;
  }
  return nullptr;
}

std::map<std::string, cts::CtsSelection> RetrieveForUnit(
    const RunContext& ctx, const prompt::GenerationUnit& unit, const std::string& draft,
    int draft_tokens, std::vector<std::string>& warnings) {
  std::map<std::string, cts::CtsSelection> selections;
  if (Trim(draft).empty()) {
    warnings.push_back("unit " + std::to_string(unit.unit_index) +
                       " draft is empty; no sentences retrieved");
    return selections;
  }
  const auto queries = cts::ExtractQuerySpans(draft, ctx.cited_bib);
  std::vector<std::pair<std::string, std::string>> wanted;
  for (const auto& id : unit.cited_ids) {
    auto it = queries.find(id);
    if (it == queries.end() || it->second.empty()) continue;
    std::string joined;
    for (const auto& q : it->second) joined += (joined.empty() ? "" : " ") + q;
    wanted.emplace_back(id, joined);
  }
  if (wanted.empty()) return selections;
  // Room left in the prompt, shared evenly, minus each block's header line.
  const int n = static_cast<int>(wanted.size());
  const int per_paper = (ctx.config.token_budget - draft_tokens) / n - 16;
  if (per_paper <= 0) {
    warnings.push_back("unit " + std::to_string(unit.unit_index) +
                       " has no budget left for retrieved sentences");
    return selections;
  }
  for (const auto& [id, query] : wanted) {
    const ingest::PaperRecord* record = FindCited(ctx.corpus, id);
    if (!record) continue;
    try {
      auto sel = cts::RetrieveCts({id, query, ctx.config.k_cap, per_paper}, *record,
                                  ctx.config.exclude_related_work_from_cts);
      if (sel.k_effective > 0) selections.emplace(id, std::move(sel));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPrecondition) throw;
      warnings.push_back(e.what());
    }
  }
  return selections;
}

VariantRecord RunVariant(const RunContext& ctx, const std::string& variant_id,
                         std::string* output,
                         std::map<std::string, cts::CtsSelection>* cts_out) {
  VariantRecord rec;
  rec.variant_id = variant_id;
  try {
    const prompt::VariantSpec spec = prompt::VariantFeatures(variant_id);
    prompt::VariantSpec draft_spec = spec;
    draft_spec.use_cts = false;
    const prompt::GenerationOptions gopts{ctx.config.field_of_study, ctx.config.token_budget};

    std::optional<std::string> longest_idea;
    if (spec.use_main_idea) {
      if (!ctx.plan) {
        throw Error(ErrorCode::kPrecondition, "variant " + variant_id + " needs main ideas");
      }
      std::vector<prompt::GenerationUnit> probe(1);
      prompt::AssignMainIdeas(*ctx.plan, probe);
      longest_idea = probe[0].main_idea;
    }
    std::vector<prompt::ChunkItem> items;
    for (const auto& id : prompt::ChronologicalOrder(ctx.network, ctx.network.cited_ids)) {
      items.push_back({id, prompt::EstimatePaperBlock(draft_spec, ctx.network, id)});
    }
    const int overhead =
        prompt::EstimateGenerationOverhead(draft_spec, ctx.taic, longest_idea, gopts);
    prompt::ChunkPlan plan =
        prompt::PlanChunks(items, ctx.layout, ctx.config.token_budget, overhead);
    rec.chunk_method = std::string(prompt::ChunkMethodName(plan.method));
    rec.warnings = plan.warnings;
    if (spec.use_main_idea) {
      for (auto& w : prompt::AssignMainIdeas(*ctx.plan, plan.units)) rec.warnings.push_back(w);
    }

    std::vector<std::string> texts;
    for (const auto& unit : plan.units) {
      UnitRecord unit_rec;
      unit_rec.unit_index = unit.unit_index;
      unit_rec.label = unit.label;
      unit_rec.cited_ids = unit.cited_ids;
      unit_rec.estimated_tokens = unit.estimated_tokens;
      const std::string tag = "generate:" + variant_id + ":" + std::to_string(unit.unit_index);

      prompt::PromptBundle bundle = prompt::RenderGenerationPrompt(
          draft_spec, ctx.taic, ctx.network.target_id, unit, ctx.network, nullptr, gopts);
      unit_rec.bundles.push_back(prompt::BundleToJson(bundle));
      std::string text = Trim(
          ctx.generator.Complete(ctx.generator.MakeRequest(bundle.user), spec.use_cts ? tag + ":draft" : tag)
              .content);
      unit_rec.generation_passes = 1;

      if (spec.use_cts) {
        auto selections = RetrieveForUnit(ctx, unit, text, bundle.estimated_tokens, rec.warnings);
        prompt::PromptBundle augmented = cts::AugmentWithCts(
            ctx.taic, ctx.network.target_id, unit, ctx.network, selections, gopts);
        unit_rec.bundles.push_back(prompt::BundleToJson(augmented));
        text = Trim(ctx.generator.Complete(ctx.generator.MakeRequest(augmented.user), tag + ":cts")
                        .content);
        unit_rec.generation_passes = 2;
        for (auto& [id, sel] : selections) (*cts_out)[id] = std::move(sel);
      }
      unit_rec.paragraphs = CountParagraphs(text);
      if (unit_rec.paragraphs > 3) {
        rec.warnings.push_back("unit " + std::to_string(unit.unit_index) + " has " +
                               std::to_string(unit_rec.paragraphs) +
                               " paragraphs, more than the 3 requested");
      }
      texts.push_back(std::move(text));
      rec.units.push_back(std::move(unit_rec));
    }
    output->clear();
    for (const auto& t : texts) *output += (output->empty() ? "" : "\n\n") + t;
    *output += "\n";
    rec.ok = true;
  } catch (const Error& e) {
    rec.ok = false;
    rec.error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.error = e.what();
  }
  return rec;
}

nlohmann::json FeatureTextsToJson(const FeatureTexts& f) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, texts] : f) j[name] = texts;
  return j;
}

std::optional<std::string> GoldBody(const RunConfig& config) {
  if (!config.gold_file) return std::nullopt;
  return prompt::RelatedWorkBody(ReadFile(*config.gold_file));
}

}  // namespace

Corpus LoadCorpus(const RunConfig& config) {
  Corpus corpus;
  corpus.target = ingest::LoadPaperRecordFile(config.target);
  for (const auto& p : ExpandRecordPaths(config.cited)) {
    corpus.cited.push_back(ingest::LoadPaperRecordFile(p));
  }
  for (const auto& p : ExpandRecordPaths(config.extra_citing)) {
    corpus.extra_citing.push_back(ingest::LoadPaperRecordFile(p));
  }
  return corpus;
}

std::vector<ingest::BibEntry> CitedBibliography(std::span<const ingest::PaperRecord> cited) {
  std::vector<ingest::BibEntry> bib;
  for (const auto& r : cited) bib.push_back({r.paper_id, r.title, r.FirstAuthorLastName(), r.year});
  std::stable_sort(bib.begin(), bib.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(!a.year.has_value(), a.year.value_or(0), a.first_author_last_name,
                           a.bib_id) < std::make_tuple(!b.year.has_value(), b.year.value_or(0),
                                                       b.first_author_last_name, b.bib_id);
  });
  return bib;
}

int CountParagraphs(std::string_view text) {
  int count = 0;
  bool in_paragraph = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) {
      in_paragraph = false;
    } else if (!in_paragraph) {
      in_paragraph = true;
      ++count;
    }
  }
  return count;
}

RunManifest RunPipeline(const RunConfig& base_config, const PipelineOptions& options) {
  RunConfig config = base_config;
  if (options.variants) config.variants = *options.variants;
  ValidateRunConfig(config);

  RunManifest m;
  m.started_at = UtcNow();
  m.config_digest = Sha256Hex(config.source.dump());
  m.seed = config.seed;
  m.template_versions = {{"extraction", config.extraction_profile.template_version},
                         {"generation", config.generation_profile.template_version}};
  const fs::path& out = config.out_dir;

  Corpus corpus;
  {
    StageTimer t(m, "ingest");
    corpus = LoadCorpus(config);
  }
  auto log = std::make_shared<llm::CallLog>();
  llm::ClientOptions copts;
  copts.transport = options.transport ? options.transport : llm::MakeHttpTransport();
  copts.log = log;
  copts.sleeper = options.sleeper;
  copts.max_in_flight = config.max_in_flight;
  auto extraction = std::make_shared<llm::LlmClient>(config.extraction_profile, copts);
  llm::LlmClient generation(config.generation_profile, copts);
  auto cache = std::make_shared<graph::FeatureCache>(out / "cache");
  graph::FeatureExtractor extractor(extraction, cache);

  graph::CitationNetwork network;
  {
    StageTimer t(m, "features");
    network = graph::BuildNetwork(corpus.target, corpus.cited, corpus.extra_citing, extractor,
                                  {config.max_in_flight});
  }
  WriteOutput(out, "network.json", graph::NetworkToJson(network).dump(2) + "\n", m);

  const ingest::TaicBundle taic = ingest::ExtractTaic(corpus.target);
  for (const auto& w : taic.warnings) m.warnings.push_back("target: " + w);
  const std::vector<ingest::BibEntry> cited_bib = CitedBibliography(corpus.cited);

  std::optional<std::string> gold_raw;
  if (config.gold_file) gold_raw = ReadFile(*config.gold_file);
  std::optional<prompt::MainIdeaPlan> plan;
  {
    StageTimer t(m, "main_ideas");
    if (config.plan_file) {
      plan = prompt::LoadPlanFile(*config.plan_file);
      plan->source = prompt::PlanSource::kHumanProvided;
      m.main_idea_source = "human_provided";
    } else if (gold_raw) {
      const auto& target_node = network.Node(network.target_id);
      prompt::MainIdeaPlan p;
      p.source = prompt::PlanSource::kCondensedFromGold;
      p.entries.push_back(
          {"", extractor.DeriveMainIdea(corpus.target, *target_node.faceted,
                                        prompt::RelatedWorkBody(*gold_raw))});
      plan = std::move(p);
      m.main_idea_source = "condensed_from_gold";
    } else {
      m.main_idea_source = "none";
    }
  }
  std::optional<std::vector<prompt::LayoutGroup>> layout;
  if (gold_raw) layout = prompt::LayoutFromRelatedWork(*gold_raw, cited_bib);

  FeatureTexts features;
  if (plan) {
    for (const auto& e : plan->entries) features["main_idea"].push_back(e.text);
  }
  features["taic"].push_back(TaicText(taic));
  for (const auto& id : network.cited_ids) {
    const auto& node = network.Node(id);
    if (node.faceted) features["faceted_summary"].push_back(graph::RenderFacetedBlock(*node.faceted));
    features["cited_abstract"].push_back(node.abstract);
    if (auto it = network.usages.find(id); it != network.usages.end()) {
      features["usage"].push_back(it->second.summary);
    }
    for (const auto* e : network.IncomingEdges(id)) features["relationship"].push_back(e->relation_text);
  }

  std::map<std::string, std::string> outputs;
  std::map<std::string, cts::CtsSelection> cts_selections;
  if (options.generate) {
    RunContext ctx{config, corpus, network, taic, plan, layout, cited_bib, generation};
    for (const auto& v : config.variants) {
      StageTimer t(m, "generate:" + v);
      std::string text;
      VariantRecord rec = RunVariant(ctx, v, &text, &cts_selections);
      if (rec.ok) {
        WriteOutput(out, "out/" + v + ".txt", text, m);
        outputs[v] = text;
      }
      m.variants.push_back(std::move(rec));
    }
    for (const auto& [id, sel] : cts_selections) {
      WriteOutput(out, "cts/" + id + ".json", cts::SelectionToJson(sel).dump(2) + "\n", m);
      for (const auto& c : sel.chosen) features["cts"].push_back(c.sentence);
    }
  }
  WriteOutput(out, "feature_texts.json", FeatureTextsToJson(features).dump(2) + "\n", m);

  if (options.generate && options.lint) {
    StageTimer t(m, "lint");
    nlohmann::json lint = nlohmann::json::object();
    std::vector<std::string> expected;
    for (const auto& b : cited_bib) expected.push_back(b.bib_id);
    for (const auto& [v, text] : outputs) {
      lint[v] = LintToJson(LintGeneration(text, expected, cited_bib));
    }
    WriteOutput(out, "lint.json", lint.dump(2) + "\n", m);
  }
  if (options.generate && options.evaluate) {
    StageTimer t(m, "evaluate");
    std::optional<std::string> gold_body;
    if (gold_raw) gold_body = prompt::RelatedWorkBody(*gold_raw);
    const MetricsReport report = EvaluateRun(outputs, gold_body, features, config.correlations);
    WriteOutput(out, "metrics.json", MetricsToJson(report).dump(2) + "\n", m);
    WriteOutput(out, "metrics.csv", MetricsToCsv(report), m);
  }

  m.calls = log->Snapshot();
  m.cache_hits = cache->hits();
  m.cache_misses = cache->misses();
  for (const auto& w : cache->warnings()) m.warnings.push_back(w);
  WriteRaw(out / "manifest.json", ManifestToJson(m).dump(2) + "\n");
  return m;
}

MetricsReport EvaluateOutputs(const RunConfig& config) {
  std::map<std::string, std::string> outputs;
  for (const auto& v : config.variants) {
    const fs::path p = config.out_dir / "out" / (v + ".txt");
    if (fs::exists(p)) outputs[v] = ReadFile(p);
  }
  FeatureTexts features;
  const fs::path ft = config.out_dir / "feature_texts.json";
  if (fs::exists(ft)) {
    const nlohmann::json doc = nlohmann::json::parse(ReadFile(ft));
    for (const auto& [name, texts] : doc.items()) {
      features[name] = texts.get<std::vector<std::string>>();
    }
  }
  MetricsReport report = EvaluateRun(outputs, GoldBody(config), features, config.correlations);
  if (!fs::exists(ft)) report.warnings.push_back("feature_texts.json not found; run features first");
  WriteRaw(config.out_dir / "metrics.json", MetricsToJson(report).dump(2) + "\n");
  WriteRaw(config.out_dir / "metrics.csv", MetricsToCsv(report));
  return report;
}

std::map<std::string, LintReport> LintOutputs(const RunConfig& config) {
  const Corpus corpus = LoadCorpus(config);
  const auto bib = CitedBibliography(corpus.cited);
  std::vector<std::string> expected;
  for (const auto& b : bib) expected.push_back(b.bib_id);
  std::map<std::string, LintReport> reports;
  nlohmann::json lint = nlohmann::json::object();
  for (const auto& v : config.variants) {
    const fs::path p = config.out_dir / "out" / (v + ".txt");
    if (!fs::exists(p)) continue;
    reports[v] = LintGeneration(ReadFile(p), expected, bib);
    lint[v] = LintToJson(reports[v]);
  }
  WriteRaw(config.out_dir / "lint.json", lint.dump(2) + "\n");
  return reports;
}

}  // namespace litreview::pipeline
