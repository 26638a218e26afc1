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

#include "litreview/graph/feature_cache.h"

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "litreview/digest.h"
#include "litreview/error.h"

namespace litreview::graph {

std::string FeatureCacheKey::Digest() const {
  std::string material;
  for (const std::string* part : {&template_version, &operation, &input_digest, &model_id}) {
    material += *part;
    material += '\x1f';
  }
  return Sha256Hex(material);
}

FeatureCache::FeatureCache(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path FeatureCache::PathFor(const FeatureCacheKey& key) const {
  return root_ / key.operation / (key.Digest() + ".json");
}

std::vector<std::string> FeatureCache::warnings() const {
  std::lock_guard<std::mutex> lock(warn_mu_);
  return warnings_;
}

CachedFeature FeatureCache::Memoize(const FeatureCacheKey& key, const Producer& producer) {
  const std::filesystem::path path = PathFor(key);
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      const nlohmann::json entry = nlohmann::json::parse(buf.str());
      if (entry.at("operation") == key.operation && entry.at("model_id") == key.model_id &&
          entry.at("template_version") == key.template_version &&
          entry.at("input_digest") == key.input_digest) {
        ++hits_;
        return CachedFeature{entry.at("raw_completion").get<std::string>(), entry.at("value"),
                             true};
      }
      throw std::runtime_error("key fields do not match");
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(warn_mu_);
      warnings_.push_back("corrupt cache entry " + path.string() + " ignored: " + e.what());
    }
  }
  ++misses_;
  CachedFeature produced = producer();
  produced.hit = false;
  Store(key, produced);
  return produced;
}

void FeatureCache::Store(const FeatureCacheKey& key, const CachedFeature& feature) {
  const auto now = std::chrono::system_clock::now();
  nlohmann::json entry = {
      {"template_version", key.template_version},
      {"operation", key.operation},
      {"input_digest", key.input_digest},
      {"model_id", key.model_id},
      {"raw_completion", feature.raw_completion},
      {"value", feature.value},
      {"timestamp",
       std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count()},
  };
  const std::filesystem::path path = PathFor(key);
  std::lock_guard<std::mutex> lock(write_mu_);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create cache directory " + path.parent_path().string(),
                ec.message());
  }
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  const std::filesystem::path tmp = path.string() + ".tmp." + tid.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << entry.dump(2) << '\n';
    if (!out) throw Error(ErrorCode::kIo, "cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot publish cache entry " + path.string(), ec.message());
  }
}

}  // namespace litreview::graph
