#include <map>

#include "doctest.h"
#include "json.hpp"

#include "caystir/cycle_type.hpp"
#include "caystir/stirling.hpp"

using caystir::BigInt;
using caystir::StirlingFunction;

TEST_CASE("classical values") {
  StirlingFunction f = StirlingFunction::classical();
  CHECK(f.eval(4, 2) == BigInt(11));
  CHECK(f.eval(5, 1) == BigInt(24));
  for (int n = 1; n <= 12; ++n) CHECK(f.eval(n, n) == BigInt(1));
  CHECK(f.eval_r(5, 1) == BigInt(10));  // c(5, 4)
  CHECK(f.eval(6, 9) == BigInt(0));     // m > n
  CHECK(f.eval_r(7, -1) == BigInt(0));  // r < 0
  // Row sums are factorials.
  for (int n = 1; n <= 12; ++n) {
    BigInt sum = 0;
    for (int m = 1; m <= n; ++m) sum += f.eval(n, m);
    CHECK(sum == caystir::factorial(n));
  }
}

TEST_CASE("single-transposition ball sizes") {
  // Threshold 2, seed {2 -> 1}, constant 2 below m = 2.
  StirlingFunction f = StirlingFunction::transposition_ball();
  CHECK(f.eval(2, 2) == BigInt(1));
  CHECK(f.eval(2, 1) == BigInt(2));
  CHECK(f.eval(3, 1) == BigInt(6));  // the whole of Sym(3)
  CHECK(f.eval_r(4, 1) == BigInt(7));
  CHECK(f.eval_r(4, 3) == BigInt(24));
}

TEST_CASE("domain errors") {
  StirlingFunction f = StirlingFunction::classical();
  CHECK_THROWS_AS(f.eval(0, 0), std::domain_error);
  StirlingFunction g(3, 1, {{3, BigInt(4)}, {2, BigInt(1)}}, BigInt(0));
  CHECK_THROWS_AS(g.eval(2, 1), std::domain_error);
  // Seed keys above the threshold are rejected outright.
  CHECK_THROWS_AS(StirlingFunction(2, 1, {{5, BigInt(1)}}, BigInt(0)),
                  std::invalid_argument);
}

TEST_CASE("recurrence holds on materialized rows") {
  StirlingFunction f(2, 0, {{2, BigInt(3)}, {1, BigInt(5)}, {0, BigInt(2)}},
                     BigInt(2));
  for (int n = 3; n <= 22; ++n) {
    for (int m = -3; m <= n; ++m) {
      CHECK(f.eval(n, m) ==
            f.eval(n - 1, m - 1) + BigInt(n - 1) * f.eval(n - 1, m));
    }
  }
}

TEST_CASE("tail region stays constant within each row") {
  StirlingFunction f = StirlingFunction::transposition_ball();
  for (int n = 3; n <= 10; ++n) {
    const BigInt low = f.eval(n, -5);
    CHECK(f.eval(n, -6) == low);
    CHECK(f.eval(n, -40) == low);
  }
}

TEST_CASE("json round trip") {
  StirlingFunction f(3, 1, {{3, BigInt(1)}, {2, BigInt(9)}, {1, BigInt(3)}},
                     BigInt(3));
  f.warm_up(9);
  const std::string text = f.to_json();
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.at("threshold").get<int>() == 3);
  CHECK(doc.at("seed").is_object());
  StirlingFunction g = StirlingFunction::from_json(text);
  for (int n = 3; n <= 12; ++n)
    for (int m = -4; m <= n + 1; ++m) CHECK(g.eval(n, m) == f.eval(n, m));
}

TEST_CASE("warm up then read") {
  StirlingFunction f = StirlingFunction::classical();
  f.warm_up(25);
  CHECK(f.eval(25, 25) == BigInt(1));
  CHECK(f.eval(24, 1) == caystir::factorial(23));
}
