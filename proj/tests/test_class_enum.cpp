#include <set>
#include <vector>

#include "doctest.h"

#include "caystir/class_enum.hpp"

using caystir::BigInt;
using caystir::CycleType;
using caystir::for_each_in_class;
using caystir::for_each_in_class_range;
using caystir::Permutation;
using caystir::random_of_type;
using caystir::unrank_in_class;

TEST_CASE("full-class enumeration is exact and duplicate-free") {
  for (const char* name : {"1^1 2^2", "1^2 3^1", "2^1 4^1", "1^6"}) {
    const CycleType type = CycleType::parse(name);
    std::set<Permutation> seen;
    for_each_in_class(type, [&](const Permutation& g) {
      CHECK(g.cycle_type() == type);
      seen.insert(g);
      return true;
    });
    CHECK(BigInt(seen.size()) == type.class_size());
  }
}

TEST_CASE("early stop") {
  int visited = 0;
  const bool completed =
      for_each_in_class(CycleType::parse("1^1 2^2"), [&](const Permutation&) {
        return ++visited < 4;
      });
  CHECK_FALSE(completed);
  CHECK(visited == 4);
}

TEST_CASE("range form partitions the class") {
  const CycleType type = CycleType::parse("1^2 2^1 3^1");  // degree 7
  const BigInt size = type.class_size();

  std::vector<Permutation> full;
  for_each_in_class(type, [&](const Permutation& g) {
    full.push_back(g);
    return true;
  });
  REQUIRE(BigInt(full.size()) == size);

  // Splitting at an arbitrary interior point reproduces the same sequence.
  const BigInt cut = size / 3;
  std::vector<Permutation> glued;
  for_each_in_class_range(type, 0, cut, [&](const Permutation& g) {
    glued.push_back(g);
    return true;
  });
  for_each_in_class_range(type, cut, size, [&](const Permutation& g) {
    glued.push_back(g);
    return true;
  });
  CHECK(glued == full);
}

TEST_CASE("unranking matches enumeration order") {
  const CycleType type = CycleType::parse("1^1 2^2");
  std::vector<Permutation> full;
  for_each_in_class(type, [&](const Permutation& g) {
    full.push_back(g);
    return true;
  });
  for (std::size_t i = 0; i < full.size(); ++i)
    CHECK(unrank_in_class(type, BigInt(i)) == full[i]);
  CHECK_THROWS_AS(unrank_in_class(type, type.class_size()),
                  std::out_of_range);
}

TEST_CASE("random elements land in the class, reproducibly") {
  const CycleType type = CycleType::parse("1^3 2^2 3^1");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Permutation g = random_of_type(type, seed);
    CHECK(g.cycle_type() == type);
    CHECK(random_of_type(type, seed) == g);
  }
}
