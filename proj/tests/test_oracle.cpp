#include <map>

#include "doctest.h"

#include "caystir/class_enum.hpp"
#include "caystir/metric.hpp"
#include "caystir/oracle.hpp"

using caystir::BigInt;
using caystir::CycleType;
using caystir::ElementBfs;
using caystir::GraphSpec;
using caystir::i_g_direct;
using caystir::OracleLimits;
using caystir::Permutation;
using caystir::phi_direct;
using caystir::SeedKind;
using caystir::SeedRow;

TEST_CASE("element BFS basics") {
  const GraphSpec spec(1, 4);
  const ElementBfs bfs(spec);
  CHECK(bfs.order() == 24);
  CHECK(bfs.distance_of(Permutation(4)) == 0);
  CHECK(bfs.eccentricity() == 3);

  const auto hist = bfs.sphere_histogram();
  REQUIRE(hist.size() == 4);
  CHECK(hist[0] == 1);
  CHECK(hist[1] == 6);
  std::uint64_t total = 0;
  for (const auto c : hist) total += c;
  CHECK(total == 24);
}

TEST_CASE("element BFS on the alternating group") {
  const ElementBfs bfs(GraphSpec(2, 5));
  CHECK(bfs.order() == 60);
  CHECK(bfs.eccentricity() == 2);
  CHECK_THROWS_AS(bfs.distance_of(Permutation::parse("(1 2)", 5)),
                  std::invalid_argument);

  const auto by_type = bfs.class_distances();
  CHECK(by_type.at(CycleType::parse("1^2 3^1")) == 2);
  CHECK(by_type.at(CycleType::parse("1^1 2^2")) == 1);
}

TEST_CASE("element cap") {
  OracleLimits limits;
  limits.element_cap = 100;
  CHECK_THROWS_AS(ElementBfs(GraphSpec(1, 5), limits), std::domain_error);
}

TEST_CASE("class BFS agrees with element BFS") {
  for (const GraphSpec& spec : {GraphSpec(2, 6), GraphSpec(3, 8)}) {
    const ElementBfs element(spec);
    const auto by_type = element.class_distances();
    const caystir::ClassBfsResult res = caystir::class_bfs(spec);
    CHECK(res.diameter == element.eccentricity());
    CHECK(res.distances.size() == by_type.size());
    for (const auto& [type, d] : res.distances) CHECK(by_type.at(type) == d);
  }
}

TEST_CASE("deficit-pair histogram counts match a direct filter") {
  const Permutation g = Permutation::parse("(1 2 3)", 4);
  const auto hist = caystir::DeficitPairHistogram::scan(g);
  // Reference: literal loop over Sym(4).
  for (int c1 = -1; c1 <= 4; ++c1) {
    for (int c2 = -1; c2 <= 4; ++c2) {
      for (int parity = -1; parity <= 1; ++parity) {
        std::uint64_t want = 0;
        for (std::uint64_t rank = 0; rank < 24; ++rank) {
          const Permutation x = Permutation::from_lex_rank(4, rank);
          const int d1 = x.deficit();
          const int d2 = compose(x, g.inverse()).deficit();
          if (d1 > c1 || d2 > c2) continue;
          if (parity >= 0 && d2 % 2 != parity) continue;
          ++want;
        }
        CHECK(hist.count_leq(c1, c2, parity) == BigInt(want));
      }
    }
  }
}

TEST_CASE("direct I_g values") {
  const Permutation swap2 = Permutation::parse("(1 2)");
  CHECK(i_g_direct(2, 0, swap2) == BigInt(0));
  CHECK(i_g_direct(2, 1, swap2) == BigInt(1));
  CHECK(i_g_direct(5, -1, Permutation(5)) == BigInt(0));

  // I_e(n, r) = |Z_r|: deficit <= r with parity of r.
  for (int r = 0; r <= 6; ++r) {
    BigInt z = 0;
    for (const CycleType& type : caystir::partitions_of(5))
      if (type.deficit() <= r && type.deficit() % 2 == r % 2)
        z += type.class_size();
    CHECK(i_g_direct(5, r, Permutation(5)) == z);
  }

  // Saturation at r >= n-1: a full parity class.
  CHECK(i_g_direct(5, 4, Permutation::parse("(1 2 3)", 5)) == BigInt(60));
  CHECK(i_g_direct(5, 7, Permutation::parse("(1 2)", 5)) == BigInt(60));

  CHECK_THROWS_AS(i_g_direct(4, 2, Permutation::parse("(1 2)", 5)),
                  std::invalid_argument);
}

TEST_CASE("shifted overlap") {
  const Permutation g = Permutation::parse("(1 2)", 6);
  CHECK(caystir::shifted_overlap_direct(1, 3, g) == BigInt(0));  // rho < off
  CHECK_THROWS_AS(caystir::shifted_overlap_direct(2, -1, g),
                  std::invalid_argument);
  // offset 0 with parity rho reproduces I_g.
  for (int rho = 0; rho <= 8; ++rho)
    CHECK(caystir::shifted_overlap_direct(rho, 0, g) ==
          i_g_direct(6, rho, g));
}

TEST_CASE("direct phi") {
  CHECK(phi_direct(GraphSpec(1, 3), 1, Permutation::parse("(1 2)", 3)) ==
        BigInt(2));
  CHECK(phi_direct(GraphSpec(1, 4), 1, Permutation::parse("(1 2)", 4)) ==
        BigInt(2));

  // Phi at the centre e is the ball size; at the diameter, the whole group.
  const GraphSpec spec(2, 6);
  for (int r = 0; r <= 3; ++r)
    CHECK(phi_direct(spec, r, Permutation(6)) == caystir::ball_size(spec, r));
  CHECK(phi_direct(spec, caystir::diameter(spec),
                   Permutation::parse("(1 2 3)", 6)) == spec.group_order());

  OracleLimits tight;
  tight.element_cap = 10;
  CHECK_THROWS_AS(phi_direct(GraphSpec(1, 5), 2, Permutation(5), tight),
                  std::domain_error);
}

TEST_CASE("seed rows at the threshold") {
  // Identity, I-row: Sym(2) gives the constant row {1, 1, 1}.
  const SeedRow e_row =
      caystir::compute_seed_row(SeedKind::IRow, CycleType(std::vector<int>{}));
  CHECK(e_row.threshold == 2);
  CHECK(e_row.row.at(0) == BigInt(1));
  CHECK(e_row.row.at(1) == BigInt(1));
  CHECK(e_row.row.at(2) == BigInt(1));
  CHECK(e_row.tail == BigInt(1));

  // Transposition, phi-k1 kind: {0, 2} with tail 2.
  const SeedRow t_row =
      caystir::compute_seed_row(SeedKind::PhiK1, CycleType({2}));
  CHECK(t_row.threshold == 2);
  CHECK(t_row.row.at(0) == BigInt(0));
  CHECK(t_row.row.at(1) == BigInt(2));
  CHECK(t_row.tail == BigInt(2));

  // Phi rows are weakly increasing (balls are nested).
  const SeedRow c_row =
      caystir::compute_seed_row(SeedKind::PhiK1, CycleType({3, 2}));
  BigInt prev = 0;
  for (const auto& [r, value] : c_row.row) {
    CHECK(value >= prev);
    prev = value;
  }

  CHECK_THROWS_AS(
      caystir::compute_seed_row(SeedKind::IRow, CycleType({11})),
      std::domain_error);
}

TEST_CASE("seeded recursions reproduce direct counts upward") {
  // I-row for (1 2 3): eval_r at higher n must equal fresh enumeration.
  const CycleType three({3});
  caystir::StirlingFunction f =
      caystir::compute_seed_row(SeedKind::IRow, three).to_stirling();
  for (int n = 3; n <= 7; ++n) {
    const Permutation rep = three.embedded(n).canonical_rep();
    for (int r = 0; r <= 2 * n; ++r)
      CHECK(f.eval_r(n, r) == i_g_direct(n, r, rep));
  }

  // Cross-row with offset 3 for (1 2): matches the shifted overlap.
  const CycleType two({2});
  caystir::StirlingFunction x =
      caystir::compute_seed_row(SeedKind::CrossRow, two, 3).to_stirling();
  for (int n = 2; n <= 7; ++n) {
    const Permutation rep = two.embedded(n).canonical_rep();
    for (int rho = 0; rho <= 2 * n + 3; ++rho)
      CHECK(x.eval_r(n, rho) == caystir::shifted_overlap_direct(rho, 3, rep));
  }
}

TEST_CASE("seed row json round trip") {
  const SeedRow row =
      caystir::compute_seed_row(SeedKind::CrossRow, CycleType({2, 2}), 5);
  const SeedRow back = SeedRow::from_json(row.to_json());
  CHECK(back.key() == row.key());
  CHECK(back.kind == row.kind);
  CHECK(back.type == row.type);
  CHECK(back.offset == row.offset);
  CHECK(back.threshold == row.threshold);
  CHECK(back.m_floor == row.m_floor);
  CHECK(back.tail == row.tail);
  CHECK(back.row == row.row);
  CHECK(row.key() == "cross-row:2^2:o5");
}
