#pragma once

// Persistent cache of mu(sigma, tau) for plain intervals. One entry per
// line: "<sigma>|<tau>\t<mu>\t<node_count>\t<engine_version>". Appends are
// last-write-wins; a malformed file is rewritten from its valid entries.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "permmob/permutation.hpp"

namespace permmob {

inline constexpr const char* kEngineVersion = "permmob-1";

struct CacheEntry {
  std::string key;
  std::int64_t mu = 0;
  std::size_t node_count = 0;
  std::string engine_version;
};

struct MuResult {
  std::int64_t mu = 0;
  std::size_t node_count = 0;
};

class MuCache {
 public:
  explicit MuCache(std::filesystem::path path, std::string engine_version = kEngineVersion);

  MuCache(const MuCache&) = delete;
  MuCache& operator=(const MuCache&) = delete;

  static std::string key(const Permutation& sigma, const Permutation& tau);

  /// Thread safe. `compute` runs outside the lock; when two callers race on
  /// one key the first stored value wins and is returned to both.
  std::int64_t get_or_compute(const Permutation& sigma, const Permutation& tau,
                              const std::function<MuResult()>& compute);

  /// Parses the key and computes from a freshly built interval on a miss.
  /// Throws std::invalid_argument on a malformed key.
  std::int64_t get_or_compute(const std::string& key);

  std::optional<CacheEntry> lookup(const std::string& key) const;

  std::size_t size() const;
  std::size_t hits() const;
  std::size_t misses() const;
  /// True if loading found corrupt lines (the file was then rewritten).
  bool recovered_from_corruption() const { return recovered_; }

 private:
  void load();

  std::filesystem::path path_;
  std::string version_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, CacheEntry> entries_;
  std::ofstream out_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
  bool recovered_ = false;
};

}  // namespace permmob
