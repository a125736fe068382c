#include <set>

#include "doctest.h"

#include "caystir/cycle_type.hpp"
#include "caystir/permutation.hpp"

using caystir::CycleType;
using caystir::factorial;
using caystir::partitions_of;
using caystir::Permutation;

TEST_CASE("construction and parsing") {
  const CycleType t({2, 2, 1});
  CHECK(t.degree() == 5);
  CHECK(t.str() == "1^1 2^2");
  CHECK(CycleType::parse("1^1 2^2") == t);
  CHECK(CycleType::parse("3 2 1").degree() == 6);
  CHECK(CycleType::identity(4).str() == "1^4");
  CHECK(CycleType(std::vector<int>{}).degree() == 0);

  CHECK_THROWS_AS(CycleType({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CycleType::parse("0^2"), std::invalid_argument);
  CHECK_THROWS_AS(CycleType::parse("junk"), std::invalid_argument);
}

TEST_CASE("derived quantities") {
  const CycleType t = CycleType::parse("1^1 2^2");
  CHECK(t.cycle_count() == 3);
  CHECK(t.deficit() == 2);
  CHECK(t.is_even());
  CHECK(t.support_size() == 4);
  CHECK(t.count_of(2) == 2);
  CHECK(t.count_of(3) == 0);
  CHECK_FALSE(t.is_identity());
  CHECK(CycleType::identity(3).is_identity());

  const auto parts = CycleType::parse("1^2 3^1 4^2").parts();
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::pair<int, int>{1, 2});
  CHECK(parts[1] == std::pair<int, int>{3, 1});
  CHECK(parts[2] == std::pair<int, int>{4, 2});
}

TEST_CASE("embedding and reduction") {
  const CycleType t = CycleType::parse("2^2");
  CHECK(t.embedded(7).str() == "1^3 2^2");
  CHECK(t.embedded(4) == t);
  CHECK(t.embedded(7).reduced() == t);
  CHECK(CycleType::identity(5).reduced().degree() == 0);
  CHECK_THROWS_AS(t.embedded(3), std::invalid_argument);
}

TEST_CASE("class sizes") {
  CHECK(CycleType::parse("1^1 2^2").class_size() == caystir::BigInt(15));
  CHECK(CycleType::identity(8).class_size() == caystir::BigInt(1));
  for (int n = 2; n <= 9; ++n) {
    const CycleType transp = CycleType({2}).embedded(n);
    CHECK(transp.class_size() == caystir::BigInt(n * (n - 1) / 2));
  }
  // Class sizes over all partitions sum to n!.
  for (int n = 1; n <= 10; ++n) {
    caystir::BigInt sum = 0;
    for (const CycleType& t : partitions_of(n)) sum += t.class_size();
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("canonical representative") {
  const CycleType t = CycleType::parse("1^1 2^2");
  const Permutation rep = t.canonical_rep();
  CHECK(rep.degree() == 5);
  CHECK(rep.cycle_type() == t);
  CHECK(CycleType::identity(3).canonical_rep() == Permutation(3));
  // Longest cycles first on consecutive points.
  CHECK(CycleType::parse("3 2").canonical_rep() ==
        Permutation::parse("(1 2 3)(4 5)"));
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(12).size() == 77);
  const auto types = partitions_of(6);
  const std::set<CycleType> unique(types.begin(), types.end());
  CHECK(unique.size() == types.size());
  for (const CycleType& t : types) CHECK(t.degree() == 6);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == caystir::BigInt(1));
  CHECK(factorial(5) == caystir::BigInt(120));
  CHECK(factorial(21) == caystir::BigInt("51090942171709440000"));
}
