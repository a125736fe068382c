#include "caystir/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "caystir/class_enum.hpp"
#include "caystir/metric.hpp"
#include "caystir/phi.hpp"
#include "caystir/seed_cache.hpp"
#include "caystir/stirling.hpp"

namespace caystir {
namespace {

constexpr std::size_t kMaxFailureLines = 8;

struct Checker {
  VerifyReport rep;

  explicit Checker(std::string name) { rep.suite = std::move(name); }

  template <typename DetailFn>
  void expect(bool ok, DetailFn&& detail) {
    ++rep.checks;
    if (ok) return;
    rep.passed = false;
    if (rep.failures.size() < kMaxFailureLines) rep.failures.push_back(detail());
  }
};

int cycles_of_word(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(static_cast<size_t>(n), 0);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<size_t>(j)];
         j = w[static_cast<size_t>(j)] - 1) {
      seen[static_cast<size_t>(j)] = 1;
    }
  }
  return cycles;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

Permutation random_vertex(const GraphSpec& spec, std::mt19937_64& rng) {
  Permutation g = random_permutation(spec.n, rng);
  if (spec.group() == Group::Alt && g.deficit() % 2 != 0) {
    std::vector<int> im = g.images();
    std::swap(im[0], im[1]);  // one extra transposition flips the parity
    g = Permutation(std::move(im));
  }
  return g;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// A random cycle type of the exact given deficit whose support fits in
/// max_support points. Falls back to the single (deficit+1)-cycle, which
/// always fits when max_support > deficit.
CycleType random_type_of_deficit(int deficit, int max_support,
                                 std::mt19937_64& rng) {
  if (deficit == 0) return CycleType(std::vector<int>{});
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<int> lengths;
    int rem = deficit;
    int support = 0;
    while (rem > 0) {
      const int e = uniform_int(rng, 1, rem);
      lengths.push_back(e + 1);
      support += e + 1;
      rem -= e;
    }
    if (support <= max_support) return CycleType(std::move(lengths));
  }
  return CycleType(std::vector<int>{deficit + 1});
}

// --------------------------------------------------------------- suites

VerifyReport suite_stirling_classical(const VerifyOptions&) {
  Checker c("stirling-classical");
  StirlingFunction f = StirlingFunction::classical();
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::uint64_t> tally(static_cast<size_t>(n) + 1, 0);
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
      ++tally[static_cast<size_t>(cycles_of_word(w))];
    } while (std::next_permutation(w.begin(), w.end()));
    for (int m = 0; m <= n; ++m) {
      const BigInt got = f.eval(n, m);
      c.expect(got == BigInt(tally[static_cast<size_t>(m)]), [&] {
        return "c(" + std::to_string(n) + "," + std::to_string(m) + ") = " +
               got.str() + ", tally says " +
               std::to_string(tally[static_cast<size_t>(m)]);
      });
    }
  }
  for (int n = 1; n <= 20; ++n) {
    BigInt sum = 0;
    for (int m = 1; m <= n; ++m) sum += f.eval(n, m);
    c.expect(sum == factorial(n), [&] {
      return "row sum at n=" + std::to_string(n) + " is " + sum.str() +
             ", not " + std::to_string(n) + "!";
    });
  }
  c.rep.summary = "cycle-count tallies to n=8, row sums to n=20";
  return c.rep;
}

VerifyReport element_sphere_suite(const std::string& name, int k, int n_lo,
                                  int n_hi, bool check_three_cycle,
                                  const VerifyOptions& o) {
  Checker c(name);
  long types = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const GraphSpec spec(k, n);
    const ElementBfs bfs(spec, o.limits);
    const auto by_type = bfs.class_distances();  // element-constancy inside
    for (const auto& [type, d] : by_type) {
      ++types;
      const RadiusResult rr = sphere_radius(spec, type);
      c.expect(rr.radius && *rr.radius == d, [&, dv = d] {
        return spec.str() + " class " + type.str() + ": BFS " +
               std::to_string(dv) + ", formula " +
               (rr.radius ? std::to_string(*rr.radius) : rr.clause);
      });
    }
    const auto hist = bfs.sphere_histogram();
    for (std::size_t r = 0; r < hist.size(); ++r) {
      c.expect(BigInt(hist[r]) == sphere_size(spec, static_cast<int>(r)),
               [&] {
                 return spec.str() + " sphere " + std::to_string(r) +
                        ": BFS " + std::to_string(hist[r]) + ", class sum " +
                        sphere_size(spec, static_cast<int>(r)).str();
               });
    }
    c.expect(bfs.eccentricity() == diameter(spec), [&] {
      return spec.str() + " BFS eccentricity " +
             std::to_string(bfs.eccentricity()) + " vs diameter formula " +
             std::to_string(diameter(spec));
    });
    if (k == 1) {
      c.expect(diameter(spec) == n - 1,
               [&] { return spec.str() + " diameter is not n-1"; });
    }
    if (check_three_cycle && n >= 4) {
      const CycleType three = CycleType(std::vector<int>{3}).embedded(n);
      c.expect(by_type.at(three) == 2, [&] {
        return spec.str() + " 3-cycle class is at distance " +
               std::to_string(by_type.at(three)) + ", expected 2";
      });
    }
  }
  c.rep.summary = std::to_string(types) + " classes, element-level, n=" +
                  std::to_string(n_lo) + ".." + std::to_string(n_hi);
  return c.rep;
}

VerifyReport class_sphere_suite(const std::string& name, int k, int n,
                                const VerifyOptions& o) {
  Checker c(name);
  const GraphSpec spec(k, n);
  const ClassBfsResult res = class_bfs(spec, o.limits);
  for (const auto& [type, d] : res.distances) {
    const RadiusResult rr = sphere_radius(spec, type);
    c.expect(rr.radius && *rr.radius == d, [&, dv = d] {
      return spec.str() + " class " + type.str() + ": BFS " +
             std::to_string(dv) + ", formula " +
             (rr.radius ? std::to_string(*rr.radius) : rr.clause);
    });
  }
  c.expect(res.diameter == diameter(spec), [&] {
    return spec.str() + " BFS diameter " + std::to_string(res.diameter) +
           " vs formula " + std::to_string(diameter(spec));
  });
  c.rep.summary = std::to_string(res.distances.size()) +
                  " cycle types compared";
  return c.rep;
}

VerifyReport suite_i_recursion(const VerifyOptions& o) {
  Checker c("i-recursion");
  for (int n = 2; n <= 8; ++n) {
    for (const CycleType& type : partitions_of(n)) {
      if (type.count_of(1) == 0) continue;  // need support < n
      const Permutation g_n = type.canonical_rep();
      const Permutation g_m = type.reduced().embedded(n - 1).canonical_rep();
      for (int r = 0; r <= 2 * n; ++r) {
        const BigInt lhs = i_g_direct(n, r, g_n, o.limits);
        const BigInt rhs = i_g_direct(n - 1, r, g_m, o.limits) +
                           BigInt(n - 1) * i_g_direct(n - 1, r - 1, g_m,
                                                      o.limits);
        c.expect(lhs == rhs, [&] {
          return "I_g recursion fails at n=" + std::to_string(n) +
                 ", r=" + std::to_string(r) + ", g=" + type.str() + ": " +
                 lhs.str() + " vs " + rhs.str();
        });
      }
    }
  }
  c.rep.summary = "insertion recursion of I_g, n=2..8, r=0..2n";
  return c.rep;
}

VerifyReport suite_phi_k1(const VerifyOptions& o) {
  Checker c("phi-k1");
  for (int n = 2; n <= 8; ++n) {
    const GraphSpec spec(1, n);
    const ElementBfs bfs(spec, o.limits);
    SeedCache cache;
    PhiEngine eng(spec, &cache, o.limits);
    for (const CycleType& type : partitions_of(n)) {
      if (type.support_size() > 6) continue;
      const Permutation rep = type.canonical_rep();
      for (int r = 0; r <= n; ++r) {
        const PhiResult pr = eng.phi(r, type);
        c.expect(pr.regime == "analytic-recursion" || r == 0, [&] {
          return "phi route for k=1 should be analytic, got " + pr.regime;
        });
        const BigInt want = bfs.phi(r, rep);
        c.expect(pr.value == want, [&] {
          return spec.str() + " phi(r=" + std::to_string(r) + ", " +
                 type.str() + "): recursion " + pr.value.str() + ", BFS " +
                 want.str();
        });
      }
    }
  }
  c.rep.summary = "seeded recursion vs BFS, k=1, n=2..8, every r";
  return c.rep;
}

VerifyReport suite_phi_k2(const VerifyOptions& o) {
  Checker c("phi-k2");
  for (int n = 5; n <= 8; ++n) {
    const GraphSpec spec(2, n);
    const ElementBfs bfs(spec, o.limits);
    SeedCache cache;
    PhiEngine eng(spec, &cache, o.limits);
    const int diam = diameter(spec);
    for (const CycleType& type : partitions_of(n)) {
      if (!type.is_even() || type.support_size() > 6) continue;
      const Permutation rep = type.canonical_rep();
      const bool analytic = n > std::max(type.support_size(), 4);
      for (int r = 2; r <= diam + 1; ++r) {
        const PhiResult pr = eng.phi(r, type);
        if (analytic) {
          c.expect(pr.regime == "analytic-recursion", [&] {
            return "phi route for k=2, n>" +
                   std::to_string(std::max(type.support_size(), 4)) +
                   " should be analytic, got " + pr.regime;
          });
        }
        const BigInt want = bfs.phi(r, rep);
        c.expect(pr.value == want, [&, rv = r] {
          return spec.str() + " phi(r=" + std::to_string(rv) + ", " +
                 type.str() + "): engine " + pr.value.str() + ", BFS " +
                 want.str();
        });
      }
    }
  }
  c.rep.summary = "seeded recursion vs BFS, k=2, n=5..8, r>=2";
  return c.rep;
}

VerifyReport suite_i_phi_bridge(const VerifyOptions& o) {
  Checker c("i-phi-bridge");
  for (int n = 5; n <= 8; ++n) {
    const GraphSpec spec(2, n);
    const int diam = diameter(spec);
    for (const CycleType& type : partitions_of(n)) {
      if (!type.is_even()) continue;
      const Permutation rep = type.canonical_rep();
      for (int r = 2; r <= diam + 2; ++r) {
        const BigInt lhs = i_g_direct(n, 2 * r, rep, o.limits);
        const BigInt rhs = phi_direct(spec, r, rep, o.limits);
        c.expect(lhs == rhs, [&, rv = r] {
          return "I_g(" + std::to_string(n) + ", " + std::to_string(2 * rv) +
                 ") = " + lhs.str() + " but phi(" + std::to_string(rv) +
                 ", " + type.str() + ") = " + rhs.str();
        });
      }
    }
  }
  c.rep.summary = "I_g(n,2r) vs brute-force ball intersection, k=2";
  return c.rep;
}

VerifyReport suite_phi_balls(const VerifyOptions& o) {
  Checker c("phi-balls");
  for (const int k : {3, 4, 5}) {
    for (int n = 4 * k + 1; n <= 30; ++n) {
      const GraphSpec spec(k, n);
      SeedCache cache;
      PhiEngine eng(spec, &cache, o.limits);
      const CycleType idt = CycleType::identity(n);
      const int diam = diameter(spec);
      for (int r = 3; r <= diam + 1; ++r) {
        const PhiResult pr = eng.phi(r, idt);
        c.expect(pr.regime == "analytic-recursion",
                 [&] { return spec.str() + " identity phi not analytic"; });
        const BigInt want = ball_size(spec, r);
        c.expect(pr.value == want, [&, rv = r] {
          return spec.str() + " phi(r=" + std::to_string(rv) +
                 ", e): recursion " + pr.value.str() + ", class sums " +
                 want.str();
        });
      }
    }
  }
  c.rep.summary = "recursion vs class-size sums at g=e, k=3..5, n to 30";
  return c.rep;
}

VerifyReport suite_phi_saturation(const VerifyOptions& o) {
  Checker c("phi-saturation");
  const std::vector<std::vector<int>> small_types = {
      {}, {2}, {3}, {2, 2}, {4}, {3, 2}, {5}, {2, 2, 2}, {4, 2}, {3, 3}, {6}};
  const std::map<int, std::vector<int>> cases = {
      {1, {5, 6, 7, 8}},
      {2, {5, 6, 7, 8}},
      {3, {13, 14, 15, 20, 30}},
      {4, {17, 18, 24, 30}},
      {5, {21, 22, 26, 30}}};
  for (const auto& [k, ns] : cases) {
    for (const int n : ns) {
      const GraphSpec spec(k, n);
      SeedCache cache;
      PhiEngine eng(spec, &cache, o.limits);
      const BigInt order = spec.group_order();
      const int diam = diameter(spec);
      for (const auto& lengths : small_types) {
        const CycleType red = CycleType(lengths);
        if (red.degree() > n) continue;
        const CycleType type = red.embedded(n);
        if (spec.group() == Group::Alt && !type.is_even()) continue;
        const PhiResult at_diam = eng.phi(diam, type);
        c.expect(at_diam.value == order, [&] {
          return spec.str() + " phi(diameter=" + std::to_string(diam) +
                 ", " + type.str() + ") = " + at_diam.value.str() +
                 ", group order " + order.str();
        });
        if (diam - 1 >= 0) {
          const PhiCell below = eng.try_phi(diam - 1, type);
          if (below.value) {
            c.expect(*below.value < order, [&] {
              return spec.str() + " phi(diameter-1, " + type.str() +
                     ") already saturates";
            });
          }
        }
      }
    }
  }
  c.rep.summary = "saturation to |group| exactly at the diameter";
  return c.rep;
}

VerifyReport suite_phi_summands(const VerifyOptions& o) {
  Checker c("phi-summands");
  const std::vector<std::vector<int>> small_types = {
      {}, {2}, {3}, {2, 2}, {4}, {3, 2}, {5}, {2, 2, 2}, {6}};
  SeedCache cache({}, o.limits);
  for (const int k : {3, 5}) {
    for (const auto& lengths : small_types) {
      const CycleType red = CycleType(lengths);
      const SeedKind kind =
          red.is_even() ? SeedKind::IRow : SeedKind::CrossRow;
      const int offset = red.is_even() ? 0 : k;
      StirlingFunction f = cache.get(kind, red, offset).to_stirling();
      const int n0 = std::max(f.threshold(), 4 * k) + 1;
      for (const int r : {3, 4, 5}) {
        std::vector<int> rhos = {r * k};
        if (red.is_even()) rhos.push_back((r - 1) * k);
        for (const int rho : rhos) {
          for (int n = n0 + 1; n <= n0 + 20; ++n) {
            const BigInt lhs = f.eval_r(n, rho);
            const BigInt rhs =
                f.eval_r(n - 1, rho) + BigInt(n - 1) * f.eval_r(n - 1, rho - 1);
            c.expect(lhs == rhs, [&, nv = n] {
              return "summand recurrence fails: k=" + std::to_string(k) +
                     ", class " + red.str() + ", rho=" + std::to_string(rho) +
                     ", n=" + std::to_string(nv);
            });
          }
        }
      }
    }
  }
  c.rep.summary = "per-summand recurrence across 20 consecutive n";
  return c.rep;
}

VerifyReport suite_phi_symmetry(const VerifyOptions& o) {
  Checker c("phi-symmetry");
  std::mt19937_64 rng(o.seed);
  const std::vector<GraphSpec> specs = {
      GraphSpec(2, 7), GraphSpec(3, 8), GraphSpec(4, 8), GraphSpec(4, 9)};
  for (const GraphSpec& spec : specs) {
    const ElementBfs bfs(spec, o.limits);
    const int ecc = bfs.eccentricity();
    for (int trial = 0; trial < 3; ++trial) {
      const Permutation g = random_vertex(spec, rng);
      for (int r = 1; r <= ecc; ++r) {
        const BigInt base = bfs.phi(r, g);
        const BigInt inv = bfs.phi(r, g.inverse());
        c.expect(base == inv, [&, rv = r] {
          return spec.str() + " phi(r=" + std::to_string(rv) +
                 ") differs between " + g.str() + " and its inverse";
        });
      }
      for (const int r : {2, std::min(3, ecc)}) {
        const BigInt base = bfs.phi(r, g);
        for (int j = 0; j < 10; ++j) {
          const Permutation x = random_permutation(spec.n, rng);
          const BigInt conj = bfs.phi(r, g.conjugate_by(x));
          c.expect(conj == base, [&, rv = r] {
            return spec.str() + " phi(r=" + std::to_string(rv) +
                   ") not constant on the class of " + g.str();
          });
        }
      }
    }
  }
  c.rep.summary = "inverse and conjugation invariance of brute-force phi";
  return c.rep;
}

VerifyReport suite_factorization(const VerifyOptions& o) {
  Checker c("factorization");
  std::mt19937_64 rng(o.seed);

  for (int i = 0; i < 200; ++i) {
    const int k = uniform_int(rng, 1, 8);
    const int n = uniform_int(rng, 4 * k, 40);
    const int t = uniform_int(rng, 1, k);
    const CycleType type =
        random_type_of_deficit(2 * t, n - 2 * (k - t), rng).embedded(n);
    const Permutation g = random_of_type(type, rng());
    const auto xy = factor_two_k_transpositions(g, k);
    c.expect(xy.size() == 2 && xy[0].is_k_transposition(k) &&
                 xy[1].is_k_transposition(k) && compose(xy[0], xy[1]) == g,
             [&] {
               return "factor-two fails for k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ", g=" + g.str();
             });
  }

  for (const int k : {1, 2}) {
    for (int n = (k == 1 ? 2 : 5); n <= 8; ++n) {
      const GraphSpec spec(k, n);
      for (const CycleType& type : partitions_of(n)) {
        const RadiusResult rr = sphere_radius(spec, type);
        if (!rr.radius) continue;
        const Permutation g = type.canonical_rep();
        const auto fs = geodesic_factorization(spec, g);
        bool ok = static_cast<int>(fs.size()) == *rr.radius &&
                  compose_all(fs, n) == g;
        for (const Permutation& f : fs) ok = ok && f.is_k_transposition(k);
        c.expect(ok, [&] {
          return spec.str() + " geodesic of " + type.str() + " has length " +
                 std::to_string(fs.size()) + ", distance is " +
                 std::to_string(*rr.radius);
        });
      }
    }
  }

  for (int i = 0; i < 500; ++i) {
    const int k = uniform_int(rng, 3, 5);
    const int n = uniform_int(rng, 4 * k, 40);
    const GraphSpec spec(k, n);
    int d = uniform_int(rng, 0, n - 1);
    if (spec.group() == Group::Alt && d % 2 != 0) d -= 1;
    const CycleType type = random_type_of_deficit(d, n, rng).embedded(n);
    const RadiusResult rr = sphere_radius(spec, type);
    const Permutation g = random_of_type(type, rng());
    const auto fs = geodesic_factorization(spec, g);
    bool ok = rr.radius && static_cast<int>(fs.size()) == *rr.radius &&
              compose_all(fs, n) == g;
    for (const Permutation& f : fs) ok = ok && f.is_k_transposition(k);
    c.expect(ok, [&] {
      return spec.str() + " geodesic of class " + type.str() +
             " has length " + std::to_string(fs.size()) + ", distance is " +
             (rr.radius ? std::to_string(*rr.radius) : rr.clause);
    });
  }

  c.rep.summary = "200 factor-two + all small classes + 500 random geodesics";
  return c.rep;
}

VerifyReport suite_insertion_identities(const VerifyOptions& o) {
  Checker c("insertion-identities");
  std::mt19937_64 rng(o.seed);

  for (int i = 0; i < 1000; ++i) {
    const int n = uniform_int(rng, 3, 10);
    const Permutation u = random_permutation(n, rng);
    const Permutation v = random_permutation(n, rng);
    const int j = uniform_int(rng, 0, n);

    c.expect(compose(u, v).ins(j) == compose(u.ins(j), v.ins(0)), [&] {
      return "merge identity fails at n=" + std::to_string(n) +
             ", j=" + std::to_string(j) + ", u=" + u.str() + ", v=" + v.str();
    });

    if (j >= 1) {
      std::vector<int> im(static_cast<size_t>(n) + 1);
      std::iota(im.begin(), im.end(), 1);
      std::swap(im[static_cast<size_t>(j) - 1], im[static_cast<size_t>(n)]);
      const Permutation tj(std::move(im));
      c.expect(u.ins(j) == compose(tj, u.ins(0)), [&] {
        return "left-multiplication form fails at j=" + std::to_string(j) +
               ", u=" + u.str();
      });
    }

    c.expect(u.ins(j).del() == u, [&] {
      return "del after ins_" + std::to_string(j) + " is not the identity on " +
             u.str();
    });

    const Permutation x = u.ins(j);
    const int j_rec =
        x.inverse().apply(n + 1) == n + 1 ? 0 : x.inverse().apply(n + 1);
    c.expect(j_rec == j, [&] {
      return "insertion images overlap: ins_" + std::to_string(j) + "(" +
             u.str() + ") also looks inserted at " + std::to_string(j_rec);
    });

    // Deletion shift: distances drop by c on both coordinates, where
    // c = 1 exactly when the vertex moves the top letter.
    const Permutation g0 = random_permutation(n, rng).ins(0);
    const Permutation w = random_permutation(n + 1, rng);
    const int shift = w.apply(n + 1) != n + 1 ? 1 : 0;
    const Permutation wg = compose(w, g0);
    c.expect(w.deficit() - shift == w.del().deficit() &&
                 wg.deficit() - shift == wg.del().deficit(),
             [&] {
               return "deletion shift fails for v=" + w.str() +
                      ", g=" + g0.str();
             });
  }

  // Exhaustive over Sym(4): identities for every u, v, j, and the image
  // partition: the 5 * 24 insertions cover Sym(5) without collision.
  std::set<Permutation> images;
  std::vector<int> w(4);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> sym4;
  do {
    sym4.emplace_back(std::vector<int>(w));
  } while (std::next_permutation(w.begin(), w.end()));
  for (const Permutation& u : sym4) {
    for (int j = 0; j <= 4; ++j) {
      images.insert(u.ins(j));
      c.expect(u.ins(j).del() == u,
               [&] { return "exhaustive del-after-ins fails on " + u.str(); });
      for (const Permutation& v : sym4) {
        c.expect(compose(u, v).ins(j) == compose(u.ins(j), v.ins(0)), [&] {
          return "exhaustive merge identity fails at j=" + std::to_string(j) +
                 ", u=" + u.str() + ", v=" + v.str();
        });
      }
    }
  }
  c.expect(images.size() == 120, [&] {
    return "insertion images of Sym(4) cover " +
           std::to_string(images.size()) + " of the 120 elements of Sym(5)";
  });

  c.rep.summary = "1000 random cases";
  return c.rep;
}

VerifyReport suite_reconstruction(const VerifyOptions& o) {
  Checker c("reconstruction");
  for (int n = 5; n <= 8; ++n) {
    const GraphSpec spec(1, n);
    SeedCache cache;
    PhiEngine eng(spec, &cache, o.limits);
    const CycleType three = CycleType(std::vector<int>{3}).embedded(n);
    for (int r = 0; r <= diameter(spec); ++r) {
      const ReconstructionResult res = eng.reconstruction_number(r);
      const bool has_three =
          std::find(res.argmax.begin(), res.argmax.end(), three) !=
          res.argmax.end();
      c.expect(has_three, [&, rv = r] {
        return spec.str() + " argmax at r=" + std::to_string(rv) +
               " misses the 3-cycle class (N = " + res.value.str() + ")";
      });
    }
  }
  c.rep.summary = "3-cycle class attains N, k=1, n=5..8, every r";
  return c.rep;
}

using SuiteFn = VerifyReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"stirling-classical", &suite_stirling_classical},
      {"insertion-identities", &suite_insertion_identities},
      {"spheres-k1",
       [](const VerifyOptions& o) {
         return element_sphere_suite("spheres-k1", 1, 2, 8, false, o);
       }},
      {"spheres-k2",
       [](const VerifyOptions& o) {
         return element_sphere_suite("spheres-k2", 2, 5, 8, true, o);
       }},
      {"spheres-k3-n12",
       [](const VerifyOptions& o) {
         return class_sphere_suite("spheres-k3-n12", 3, 12, o);
       }},
      {"spheres-k3-n13",
       [](const VerifyOptions& o) {
         return class_sphere_suite("spheres-k3-n13", 3, 13, o);
       }},
      {"spheres-k3-n14",
       [](const VerifyOptions& o) {
         return class_sphere_suite("spheres-k3-n14", 3, 14, o);
       }},
      {"spheres-k4-n16",
       [](const VerifyOptions& o) {
         return class_sphere_suite("spheres-k4-n16", 4, 16, o);
       }},
      {"i-recursion", &suite_i_recursion},
      {"phi-k1", &suite_phi_k1},
      {"phi-k2", &suite_phi_k2},
      {"i-phi-bridge", &suite_i_phi_bridge},
      {"phi-balls", &suite_phi_balls},
      {"phi-saturation", &suite_phi_saturation},
      {"phi-summands", &suite_phi_summands},
      {"phi-symmetry", &suite_phi_symmetry},
      {"factorization", &suite_factorization},
      {"reconstruction", &suite_reconstruction},
  };
  return suites;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  names.reserve(registry().size());
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

VerifyReport run_verify_suite(const std::string& name,
                              const VerifyOptions& options) {
  for (const auto& [key, fn] : registry()) {
    if (key != name) continue;
    const auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    try {
      rep = fn(options);
    } catch (const std::exception& e) {
      rep.suite = name;
      rep.passed = false;
      rep.failures.push_back(std::string("suite aborted: ") + e.what());
    }
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return rep;
  }
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace caystir
