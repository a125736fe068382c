#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "caystir/cycle_type.hpp"
#include "caystir/permutation.hpp"

using caystir::compose;
using caystir::Permutation;
using caystir::transposition;

namespace {

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

}  // namespace

TEST_CASE("construction and parsing") {
  CHECK(Permutation(4).str() == "()");
  CHECK(Permutation::parse("(1 2 3)(4 5)").one_line() == "2,3,1,5,4");
  CHECK(Permutation::parse("(1 2)", 5).degree() == 5);
  CHECK(Permutation::parse("()", 3) == Permutation(3));
  CHECK(Permutation::parse("(2 4)").degree() == 4);

  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(1 2", 4), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(1 7)", 4), std::invalid_argument);
}

TEST_CASE("composition applies the left factor first") {
  const Permutation a = Permutation::parse("(1 2 3)");
  const Permutation b = Permutation::parse("(2 3)", 3);
  CHECK(compose(a, b) == Permutation::parse("(1 3)", 3));

  const Permutation c = Permutation::parse("(1 2)(4 5)", 5);
  const Permutation d = Permutation::parse("(1 3)(4 5)", 5);
  CHECK(compose(c, d) == Permutation::parse("(1 2 3)", 5));

  const Permutation g = Permutation::parse("(1 4 2)(3 5)");
  CHECK(compose(g, Permutation(5)) == g);
  CHECK(compose(Permutation(5), g) == g);
  CHECK_THROWS_AS(compose(g, Permutation(4)), std::invalid_argument);
}

TEST_CASE("inverse and conjugation") {
  CHECK(Permutation(6).inverse() == Permutation(6));
  CHECK(Permutation::parse("(1 2 3)").inverse() ==
        Permutation::parse("(1 3 2)"));

  const Permutation g = Permutation::parse("(1 2)", 3);
  CHECK(g.conjugate_by(Permutation::parse("(2 3)", 3)) ==
        Permutation::parse("(1 3)", 3));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Permutation u = random_perm(8, rng);
    const Permutation v = random_perm(8, rng);
    const Permutation w = random_perm(8, rng);
    CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));
    CHECK(compose(u, u.inverse()) == Permutation(8));
    CHECK(u.conjugate_by(v).cycle_type() == u.cycle_type());
    CHECK(u.is_even() == (u.deficit() % 2 == 0));
    CHECK((compose(u, v).deficit() % 2) ==
          ((u.deficit() + v.deficit()) % 2));
  }
}

TEST_CASE("cycle structure") {
  const Permutation g = Permutation::parse("(1 2)(3 4)", 5);
  CHECK(g.cycle_count() == 3);
  CHECK(g.cycle_type().str() == "1^1 2^2");
  CHECK(g.is_even());
  CHECK(g.support_size() == 4);

  CHECK(Permutation(9).cycle_count() == 9);
  const Permutation five = Permutation::parse("(1 5 2 3 4)");
  CHECK(five.cycle_count() == 1);
  CHECK(five.is_even());  // deficit 4

  // Multiplying by a transposition merges or splits exactly one cycle.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Permutation u = random_perm(7, rng);
    const int a = 1 + int(rng() % 7u);
    const int b = 1 + int(rng() % 7u);
    if (a == b) continue;
    const int diff =
        compose(u, transposition(7, a, b)).cycle_count() - u.cycle_count();
    CHECK((diff == 1 || diff == -1));
  }
}

TEST_CASE("k-transposition membership") {
  CHECK(Permutation::parse("(1 2)(3 4)", 5).is_k_transposition(2));
  CHECK_FALSE(Permutation::parse("(1 2 3)").is_k_transposition(1));
  CHECK_FALSE(Permutation(6).is_k_transposition(1));
  CHECK_FALSE(Permutation::parse("(1 2)(3 4)", 5).is_k_transposition(1));
  CHECK_THROWS_AS(Permutation(4).is_k_transposition(0),
                  std::invalid_argument);
}

TEST_CASE("embedding") {
  const Permutation g = Permutation::parse("(1 2)");
  CHECK(g.embed(4).degree() == 4);
  CHECK(g.embed(4).cycle_count() == 3);
  CHECK(g.embed(2) == g);
  CHECK(g.embed(6).support_size() == g.support_size());
  CHECK_THROWS_AS(g.embed(1), std::invalid_argument);
}

TEST_CASE("insertion and deletion") {
  // (1)(2,4)(3) gains point 5: after 2 into its cycle, or as a fixed point.
  const Permutation g = Permutation::parse("(2 4)", 4);
  CHECK(g.ins(2) == Permutation::parse("(2 5 4)", 5));
  CHECK(g.ins(0) == Permutation::parse("(2 4)", 5));
  const Permutation h = Permutation::parse("(1 4)", 4);
  CHECK(h.ins(2) == Permutation::parse("(2 5)(1 4)", 5));

  CHECK(g.ins(2).del() == g);
  CHECK(Permutation(5).del() == Permutation(4));
  CHECK(Permutation::parse("(1 5)", 5).del() == Permutation(4));
  CHECK_THROWS_AS(g.ins(5), std::invalid_argument);

  // ins_j multiplies by the transposition (j, n+1) on the left.
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const Permutation u = random_perm(6, rng);
    for (int j = 1; j <= 6; ++j)
      CHECK(u.ins(j) == compose(transposition(7, j, 7), u.ins(0)));
    CHECK(u.ins(0) == u.embed(7));
  }
}

TEST_CASE("lexicographic ranking round-trips") {
  CHECK(Permutation(4).lex_rank() == 0);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const Permutation u = random_perm(9, rng);
    CHECK(Permutation::from_lex_rank(9, u.lex_rank()) == u);
  }
  // Rank order agrees with one-line lexicographic order.
  CHECK(Permutation::from_lex_rank(3, 0).one_line() == "1,2,3");
  CHECK(Permutation::from_lex_rank(3, 5).one_line() == "3,2,1");
}
