#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "caystir/oracle.hpp"

namespace caystir {

/// Disk + memory cache of seed rows, keyed by (reduced cycle type, kind,
/// offset) — a class function's row never depends on the representative.
/// With an empty directory path the cache is memory-only.
class SeedCache {
 public:
  explicit SeedCache(std::filesystem::path dir = {},
                     OracleLimits limits = {});

  /// Resolution order: memory, disk, compute (then persist).
  const SeedRow& get(SeedKind kind, const CycleType& type, int offset = 0);

  /// Keys of the rows currently stored on disk, sorted.
  std::vector<std::string> list_disk() const;

  /// Deletes this cache's files on disk (*.seed.json in its directory) and
  /// empties the memory layer. Returns the number of files removed.
  int clear();

  const std::filesystem::path& dir() const { return dir_; }

  /// CAYSTIR_CACHE_DIR if set, else ~/.cache/caystir, else ./.caystir-cache.
  static std::filesystem::path default_dir();

 private:
  std::filesystem::path file_for(const std::string& key) const;

  std::filesystem::path dir_;
  OracleLimits limits_;
  std::map<std::string, SeedRow> memory_;
};

}  // namespace caystir
