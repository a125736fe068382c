#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "caystir/seed_cache.hpp"

using caystir::CycleType;
using caystir::SeedCache;
using caystir::SeedKind;
using caystir::SeedRow;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() /
           ("caystir-seed-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int seed_file_count(const fs::path& dir) {
  int count = 0;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().filename().string().ends_with(".seed.json")) ++count;
  return count;
}

}  // namespace

TEST_CASE("cache computes and persists rows") {
  const TempDir tmp;
  SeedCache cache(tmp.path);
  const SeedRow& row = cache.get(SeedKind::IRow, CycleType({3}));
  CHECK(row.key() == "i-row:3^1");
  CHECK(seed_file_count(tmp.path) == 1);
  CHECK(cache.list_disk() == std::vector<std::string>{"i-row:3^1"});

  // A fresh cache over the same directory serves the identical row.
  SeedCache reopened(tmp.path);
  CHECK(reopened.get(SeedKind::IRow, CycleType({3})).to_json() ==
        row.to_json());
  CHECK(seed_file_count(tmp.path) == 1);
}

TEST_CASE("cache key normalization") {
  const TempDir tmp;
  SeedCache cache(tmp.path);
  // Fixed points are dropped and the offset is ignored outside cross-row,
  // so all three spellings resolve to the same stored row.
  const SeedRow& a = cache.get(SeedKind::IRow, CycleType({2}));
  const SeedRow& b = cache.get(SeedKind::IRow, CycleType::parse("1^2 2^1"));
  const SeedRow& c = cache.get(SeedKind::IRow, CycleType({2}), 7);
  CHECK(&a == &b);
  CHECK(&a == &c);
  CHECK(seed_file_count(tmp.path) == 1);
}

TEST_CASE("memory-only cache") {
  SeedCache cache;
  CHECK(cache.dir().empty());
  const SeedRow& first = cache.get(SeedKind::PhiK1, CycleType({2}));
  const SeedRow& again = cache.get(SeedKind::PhiK1, CycleType({2}));
  CHECK(&first == &again);
  CHECK(cache.list_disk().empty());
  CHECK(cache.clear() == 0);
}

TEST_CASE("disk listing is sorted and clear removes everything") {
  const TempDir tmp;
  SeedCache cache(tmp.path);
  cache.get(SeedKind::PhiK1, CycleType({2}));
  cache.get(SeedKind::IRow, CycleType({2}));
  cache.get(SeedKind::CrossRow, CycleType({2}), 3);
  const std::vector<std::string> want = {"cross-row:2^1:o3", "i-row:2^1",
                                         "phi-k1:2^1"};
  CHECK(cache.list_disk() == want);

  CHECK(cache.clear() == 3);
  CHECK(cache.list_disk().empty());
  CHECK(seed_file_count(tmp.path) == 0);
  // Memory layer is emptied too: the next get recomputes and re-persists.
  cache.get(SeedKind::IRow, CycleType({2}));
  CHECK(seed_file_count(tmp.path) == 1);
}

TEST_CASE("a file holding the wrong row is rejected") {
  const TempDir tmp;
  {
    SeedCache cache(tmp.path);
    cache.get(SeedKind::IRow, CycleType({2}));
  }
  // Masquerade the i-row file as the phi-k1 row of the same type.
  fs::copy_file(tmp.path / "i-row_2p1.seed.json",
                tmp.path / "phi-k1_2p1.seed.json");
  SeedCache cache(tmp.path);
  CHECK_THROWS_AS(cache.get(SeedKind::PhiK1, CycleType({2})),
                  std::runtime_error);
}
