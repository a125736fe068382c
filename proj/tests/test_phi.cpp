#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "caystir/class_enum.hpp"
#include "caystir/metric.hpp"
#include "caystir/oracle.hpp"
#include "caystir/phi.hpp"

using caystir::BigInt;
using caystir::CycleType;
using caystir::GraphSpec;
using caystir::Permutation;
using caystir::PhiCell;
using caystir::PhiEngine;
using caystir::PhiResult;
using caystir::SeedKind;

namespace {

// Literal Phi(1, g): enumerate {e} ∪ H and test xg⁻¹ against the same set.
BigInt literal_phi1(const GraphSpec& spec, const CycleType& g_type) {
  const Permutation g_inv = g_type.canonical_rep().inverse();
  const CycleType gen = spec.generator_type();
  const auto in_ball = [&](const Permutation& x) {
    const CycleType t = x.cycle_type();
    return t.is_identity() || t == gen;
  };
  BigInt count = 0;
  const auto visit = [&](const Permutation& x) {
    if (in_ball(compose(x, g_inv))) ++count;
    return true;
  };
  if (in_ball(compose(Permutation(spec.n), g_inv))) ++count;
  caystir::for_each_in_class(gen, visit);
  return count;
}

bool message_contains(const std::function<void()>& call,
                      const std::string& needle) {
  try {
    call();
  } catch (const std::exception& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("pinned phi values") {
  PhiEngine k1n4(GraphSpec(1, 4));
  const PhiResult res = k1n4.phi(1, CycleType::parse("1^2 2^1"));
  CHECK(res.value == BigInt(2));
  CHECK(res.regime == "analytic-recursion");

  // Radius 2 already saturates the 2-transposition graph on Alt(5).
  PhiEngine k2n5(GraphSpec(2, 5));
  for (const CycleType& type : caystir::partitions_of(5)) {
    if (!type.is_even()) continue;
    CHECK(k2n5.phi(2, type).value == BigInt(60));
  }

  // r = 0 asks whether g is the identity, at any degree.
  PhiEngine k1n100(GraphSpec(1, 100));
  CHECK(k1n100.phi(0, CycleType({2}).embedded(100)).value == BigInt(0));
  CHECK(k1n100.phi(0, CycleType::identity(100)).value == BigInt(1));
  CHECK(k1n100.phi(0, CycleType::identity(100)).regime ==
        "analytic-recursion");
  // A transposition admits only the two membership pairs at radius 1.
  CHECK(k1n100.phi(1, CycleType({2}).embedded(100)).value == BigInt(2));
}

TEST_CASE("phi table of a transposition at k = 1") {
  PhiEngine engine(GraphSpec(1, 4));
  const std::vector<PhiCell> table =
      engine.phi_table(CycleType::parse("1^2 2^1"));
  REQUIRE(table.size() == 4);  // diameter 3
  const std::vector<BigInt> want = {BigInt(0), BigInt(2), BigInt(12),
                                    BigInt(24)};
  for (size_t i = 0; i < table.size(); ++i) {
    CHECK(table[i].r == static_cast<int>(i));
    REQUIRE(table[i].value.has_value());
    CHECK(*table[i].value == want[i]);
    CHECK(table[i].regime == "analytic-recursion");
    if (i > 0) CHECK(*table[i].value >= *table[i - 1].value);
  }
  CHECK(*table.back().value == GraphSpec(1, 4).group_order());
}

TEST_CASE("h_scan agrees with the literal radius-1 count") {
  for (int n = 4; n <= 6; ++n) {
    PhiEngine engine(GraphSpec(1, n));
    for (const CycleType& type : caystir::partitions_of(n))
      CHECK(engine.h_scan(type) == literal_phi1(GraphSpec(1, n), type));
  }
  for (int n = 5; n <= 7; ++n) {
    const GraphSpec spec(2, n);
    PhiEngine engine(spec);
    for (const CycleType& type : caystir::partitions_of(n)) {
      if (!type.is_even()) continue;
      const BigInt want = literal_phi1(spec, type);
      CHECK(engine.h_scan(type) == want);
      const PhiResult via_phi = engine.phi(1, type);
      CHECK(via_phi.value == want);
      CHECK(via_phi.regime == "H-scan");
    }
  }
  const GraphSpec k3n8(3, 8);
  PhiEngine engine(k3n8);
  for (const char* text :
       {"1^6 2^1", "1^5 3^1", "1^2 3^2", "1^1 7^1", "2^4", "1^4 2^2"}) {
    const CycleType type = CycleType::parse(text);
    CHECK(engine.h_scan(type) == literal_phi1(k3n8, type));
  }
}

TEST_CASE("oracle and unsupported regimes at odd k") {
  // Radius 2 on an odd-k graph: brute force where it fits...
  PhiEngine small(GraphSpec(3, 8));
  const PhiCell cell = small.try_phi(2, CycleType::parse("1^6 2^1"));
  REQUIRE(cell.value.has_value());
  CHECK(cell.regime == "oracle");
  CHECK(*cell.value ==
        caystir::phi_direct(GraphSpec(3, 8), 2,
                            CycleType::parse("1^6 2^1").canonical_rep()));

  // ...and an honest refusal where it does not.
  PhiEngine big(GraphSpec(3, 30));
  const PhiCell refused = big.try_phi(2, CycleType({2}).embedded(30));
  CHECK(!refused.value.has_value());
  CHECK(refused.regime == "unsupported");
  CHECK(refused.note.find("unsupported regime") != std::string::npos);
  CHECK_THROWS_AS(big.phi(2, CycleType({2}).embedded(30)), std::domain_error);

  // n = 12 sits exactly on the k = 3 threshold: no recursion there either.
  PhiEngine edge(GraphSpec(3, 12));
  const PhiCell below = edge.try_phi(3, CycleType({2}).embedded(12));
  CHECK(!below.value.has_value());
  CHECK(below.regime == "unsupported");
  CHECK(below.note.find("below threshold") != std::string::npos);

  // One past the threshold the recursion takes over.
  PhiEngine past(GraphSpec(3, 13));
  const PhiCell alive = past.try_phi(3, CycleType({2}).embedded(13));
  REQUIRE(alive.value.has_value());
  CHECK(alive.regime == "analytic-recursion");
}

TEST_CASE("engine matches brute force on a whole small graph") {
  const GraphSpec spec(2, 6);
  PhiEngine engine(spec);
  for (const CycleType& type : caystir::partitions_of(6)) {
    if (!type.is_even()) continue;
    for (int r = 2; r <= 4; ++r) {
      const PhiCell cell = engine.try_phi(r, type);
      REQUIRE(cell.value.has_value());
      CHECK(*cell.value ==
            caystir::phi_direct(spec, r, type.canonical_rep()));
    }
  }
}

TEST_CASE("seeded recursion accessor") {
  PhiEngine engine(GraphSpec(1, 4));
  CHECK(engine.stirling_for(CycleType({2}), SeedKind::PhiK1).eval_r(4, 1) ==
        BigInt(2));

  PhiEngine wide(GraphSpec(1, 12));
  CHECK(message_contains(
      [&] { wide.stirling_for(CycleType({11}), SeedKind::PhiK1); },
      "seed infeasible"));
  CHECK_THROWS_AS(wide.stirling_for(CycleType({11}), SeedKind::PhiK1),
                  std::domain_error);
  // The engine reports the same failure through phi() for that class.
  CHECK_THROWS_AS(wide.phi(1, CycleType::parse("1^1 11^1")),
                  std::domain_error);
}

TEST_CASE("reconstruction numbers") {
  // k = 2, n = 6, r = 2 against a manual brute-force maximum.
  const GraphSpec spec(2, 6);
  PhiEngine engine(spec);
  BigInt best = 0;
  std::vector<CycleType> best_types;
  for (const CycleType& type : caystir::partitions_of(6)) {
    if (type.is_identity() || !type.is_even()) continue;
    const BigInt value = caystir::phi_direct(spec, 2, type.canonical_rep());
    if (value > best) {
      best = value;
      best_types.assign(1, type);
    } else if (value == best) {
      best_types.push_back(type);
    }
  }
  const caystir::ReconstructionResult res = engine.reconstruction_number(2);
  CHECK(res.value == best);
  CHECK(res.argmax == best_types);

  // k = 1, n = 5, r = 1: the 3-cycle class is the unique maximizer.
  PhiEngine k1n5(GraphSpec(1, 5));
  const caystir::ReconstructionResult one = k1n5.reconstruction_number(1);
  CHECK(one.value == BigInt(3));
  REQUIRE(one.argmax.size() == 1);
  CHECK(one.argmax[0] == CycleType::parse("1^2 3^1"));

  // At the diameter every class ties at the full group order.
  const caystir::ReconstructionResult sat = k1n5.reconstruction_number(4);
  CHECK(sat.value == BigInt(120));
  CHECK(sat.argmax.size() == caystir::partitions_of(5).size() - 1);

  // Out of reach: radius 2 at odd k with a group far past the caps.
  PhiEngine big(GraphSpec(3, 30));
  CHECK_THROWS_AS(big.reconstruction_number(2), std::domain_error);
  CHECK(message_contains([&] { big.reconstruction_number(2); },
                         "exact N unavailable"));
}

TEST_CASE("input validation") {
  PhiEngine engine(GraphSpec(2, 5));
  CHECK_THROWS_AS(engine.phi(-1, CycleType::identity(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(engine.phi(1, CycleType::parse("1^3 2^1")),
                  std::invalid_argument);  // odd class, Alt graph
  CHECK_THROWS_AS(engine.phi(1, CycleType::identity(4)),
                  std::invalid_argument);  // degree mismatch
  CHECK_THROWS_AS(engine.try_phi(-1, CycleType::identity(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(engine.reconstruction_number(-1), std::invalid_argument);
}
