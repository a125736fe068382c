#include "caystir/seed_cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace caystir {
namespace {

constexpr const char* kSuffix = ".seed.json";

// Key strings carry spaces, '^' and ':'; map them to filename-safe chars.
std::string sanitize(const std::string& key) {
  std::string out;
  out.reserve(key.size());
  for (char c : key) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-') {
      out += c;
    } else if (c == '^') {
      out += 'p';
    } else if (c == ' ') {
      out += '.';
    } else {
      out += '_';
    }
  }
  return out;
}

}  // namespace

SeedCache::SeedCache(std::filesystem::path dir, OracleLimits limits)
    : dir_(std::move(dir)), limits_(limits) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::filesystem::path SeedCache::file_for(const std::string& key) const {
  return dir_ / (sanitize(key) + kSuffix);
}

const SeedRow& SeedCache::get(SeedKind kind, const CycleType& type,
                              int offset) {
  SeedRow probe;
  probe.kind = kind;
  probe.type = type.reduced();
  probe.offset = (kind == SeedKind::CrossRow) ? offset : 0;
  const std::string key = probe.key();

  if (auto it = memory_.find(key); it != memory_.end()) return it->second;

  if (!dir_.empty()) {
    const auto path = file_for(key);
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      std::ostringstream buf;
      buf << in.rdbuf();
      SeedRow loaded = SeedRow::from_json(buf.str());
      if (loaded.key() != key) {
        throw std::runtime_error("seed cache: file " + path.string() +
                                 " holds row '" + loaded.key() +
                                 "', expected '" + key + "'");
      }
      return memory_.emplace(key, std::move(loaded)).first->second;
    }
  }

  SeedRow computed =
      compute_seed_row(probe.kind, probe.type, probe.offset, limits_);
  if (!dir_.empty()) {
    std::ofstream out(file_for(key));
    out << computed.to_json() << '\n';
    if (!out) {
      throw std::runtime_error("seed cache: cannot write " +
                               file_for(key).string());
    }
  }
  return memory_.emplace(key, std::move(computed)).first->second;
}

std::vector<std::string> SeedCache::list_disk() const {
  std::vector<std::string> keys;
  if (dir_.empty() || !std::filesystem::exists(dir_)) return keys;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || !name.ends_with(kSuffix)) continue;
    std::ifstream in(entry.path());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      keys.push_back(SeedRow::from_json(buf.str()).key());
    } catch (const std::exception&) {
      keys.push_back(name + " (unreadable)");
    }
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

int SeedCache::clear() {
  memory_.clear();
  int removed = 0;
  if (dir_.empty() || !std::filesystem::exists(dir_)) return removed;
  for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
    if (entry.is_regular_file() &&
        entry.path().filename().string().ends_with(kSuffix)) {
      std::error_code ec;
      if (std::filesystem::remove(entry.path(), ec)) ++removed;
    }
  }
  return removed;
}

std::filesystem::path SeedCache::default_dir() {
  if (const char* env = std::getenv("CAYSTIR_CACHE_DIR"); env && *env) {
    return env;
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "caystir";
  }
  return std::filesystem::path(".caystir-cache");
}

}  // namespace caystir
