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

#ifndef LITREVIEW_GRAPH_FEATURE_CACHE_H_
#define LITREVIEW_GRAPH_FEATURE_CACHE_H_

#include <atomic>
#include <filesystem>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace litreview::graph {

struct FeatureCacheKey {
  std::string template_version;
  std::string operation;     // e.g. "faceted_summary"
  std::string input_digest;  // SHA-256 of the rendered prompt
  std::string model_id;

  // SHA-256 over all four fields; the on-disk file name.
  std::string Digest() const;
  bool operator==(const FeatureCacheKey&) const = default;
};

struct CachedFeature {
  std::string raw_completion;
  nlohmann::json value;
  bool hit = false;
};

// Disk-backed memo table: <root>/<operation>/<key digest>.json. Writes go
// through a temporary file and a rename, one writer at a time.
class FeatureCache {
 public:
  explicit FeatureCache(std::filesystem::path root);

  using Producer = std::function<CachedFeature()>;

  // Returns the stored entry, or runs `producer`, stores and returns its
  // result. A corrupt entry counts as a miss and is overwritten.
  CachedFeature Memoize(const FeatureCacheKey& key, const Producer& producer);

  std::filesystem::path PathFor(const FeatureCacheKey& key) const;

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  std::vector<std::string> warnings() const;

 private:
  void Store(const FeatureCacheKey& key, const CachedFeature& feature);

  std::filesystem::path root_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
  mutable std::mutex write_mu_;
  mutable std::mutex warn_mu_;
  std::vector<std::string> warnings_;
};

}  // namespace litreview::graph

#endif  // LITREVIEW_GRAPH_FEATURE_CACHE_H_
