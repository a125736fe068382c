#include "caystir/metric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace caystir {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

Permutation from_disjoint_cycles(int n,
                                 const std::vector<std::vector<int>>& cycles) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.size(); ++i)
      w[static_cast<size_t>(c[i]) - 1] = c[(i + 1) % c.size()];
  return Permutation(std::move(w));
}

Permutation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (auto [a, b] : pairs) {
    w[static_cast<size_t>(a) - 1] = b;
    w[static_cast<size_t>(b) - 1] = a;
  }
  return Permutation(std::move(w));
}

/// The two halves of the pairing that splits one cycle c = (c0 c1 ... c_{s-1})
/// into an involution product. The "short" half pairs c_i with c_{s-2-i}
/// (floor((s-1)/2) transpositions), the "long" half pairs c_i with c_{s-1-i}
/// (floor(s/2) transpositions); applying short then long traverses the cycle.
void append_half_pairs(std::vector<std::pair<int, int>>& out,
                       const std::vector<int>& c, bool long_half) {
  const int s = static_cast<int>(c.size());
  const int count = long_half ? s / 2 : (s - 1) / 2;
  const int mirror = long_half ? s - 1 : s - 2;
  for (int i = 0; i < count; ++i)
    out.emplace_back(c[static_cast<size_t>(i)],
                     c[static_cast<size_t>(mirror - i)]);
}

/// Smallest `count` points fixed by g, ascending; throws if fewer exist.
std::vector<int> smallest_fixed_points(const Permutation& g, int count,
                                       const char* who) {
  std::vector<int> out;
  for (int i = 1; i <= g.degree() && static_cast<int>(out.size()) < count; ++i)
    if (g.apply(i) == i) out.push_back(i);
  if (static_cast<int>(out.size()) < count)
    throw std::invalid_argument(std::string(who) +
                                ": insufficient fixed points for padding");
  return out;
}

/// Splits off a factor x with deficit(x) == m such that g == g1 * x
/// (apply g1 first) and deficit(g1) == deficit(g) - m. Each affected cycle
/// (c0 .. c_{s-1}) contributes the tail piece (c0, c_{s-q}, ..., c_{s-1}),
/// leaving (c0 .. c_{s-q-1}) behind; cycles are consumed in order of their
/// smallest moved point.
Permutation peel_factor(const Permutation& g, int m) {
  std::vector<std::vector<int>> xcycles;
  int remaining = m;
  for (const auto& c : g.cycle_decomposition()) {
    if (remaining == 0) break;
    const int s = static_cast<int>(c.size());
    if (s < 2) continue;
    const int q = std::min(remaining, s - 1);
    std::vector<int> xc;
    xc.reserve(static_cast<size_t>(q) + 1);
    xc.push_back(c[0]);
    for (int i = s - q; i < s; ++i) xc.push_back(c[static_cast<size_t>(i)]);
    xcycles.push_back(std::move(xc));
    remaining -= q;
  }
  if (remaining > 0)
    throw std::logic_error("peel: requested deficit exceeds available splits");
  return from_disjoint_cycles(g.degree(), xcycles);
}

/// Three k-transpositions multiplying to an odd z with deficit <= 3k not in
/// the generator class. Exists exactly on the radius-3 sphere; validated on
/// entry and by construction on exit.
std::vector<Permutation> radius3_factorization(const GraphSpec& spec,
                                               const Permutation& z);

std::vector<Permutation> geodesic_impl(const GraphSpec& spec,
                                       const Permutation& g, int r);

std::vector<Permutation> radius3_factorization(const GraphSpec& spec,
                                               const Permutation& z) {
  const int k = spec.k;
  const int d = z.deficit();
  {
    const RadiusResult rr = sphere_radius(spec, z);
    if (!rr.is_vertex() || *rr.radius != 3)
      throw std::logic_error(
          "radius-3 factorization applied off the radius-3 sphere");
  }

  if (d == 1) {
    // z is a bare transposition (alpha beta). Each factor repeats
    // (alpha beta); the remaining k-1 transpositions of the three factors
    // live on (k-1)/2 blocks of four fresh points, where they form the
    // three pairings of a four-point set. Within each block the three
    // pairings multiply to the identity (they form a Klein four-group),
    // so the full product collapses to (alpha beta).
    int alpha = 0;
    for (int i = 1; i <= z.degree(); ++i)
      if (z.apply(i) != i) {
        alpha = i;
        break;
      }
    const int beta = z.apply(alpha);
    const int blocks = (k - 1) / 2;
    const std::vector<int> fresh =
        smallest_fixed_points(z, 4 * blocks, "radius-3 factorization");
    std::vector<std::pair<int, int>> p1{{alpha, beta}}, p2{{alpha, beta}},
        p3{{alpha, beta}};
    for (int j = 0; j < blocks; ++j) {
      const int a = fresh[static_cast<size_t>(4 * j)];
      const int b = fresh[static_cast<size_t>(4 * j + 1)];
      const int c = fresh[static_cast<size_t>(4 * j + 2)];
      const int e = fresh[static_cast<size_t>(4 * j + 3)];
      p1.emplace_back(a, b);
      p1.emplace_back(c, e);
      p2.emplace_back(a, c);
      p2.emplace_back(b, e);
      p3.emplace_back(a, e);
      p3.emplace_back(b, c);
    }
    std::vector<Permutation> out{from_pairs(z.degree(), p1),
                                 from_pairs(z.degree(), p2),
                                 from_pairs(z.degree(), p3)};
    if (compose_all(out, z.degree()) != z)
      throw std::logic_error("radius-3 transposition identity failed");
    return out;
  }

  // Peel down to an even remainder in the two-factor band, then fold the
  // peeled piece into the last factor — the fold stays in the band because
  // the peel was sized to the gap above it.
  const int m = d <= 2 * k - 1 ? 1 : d - 2 * k;
  const Permutation x = peel_factor(z, m);
  const Permutation g1 = compose(z, x.inverse());
  const auto two = factor_two_k_transpositions(g1, k);
  const Permutation z2 = compose(two[1], x);
  const auto tail = factor_two_k_transpositions(z2, k);
  std::vector<Permutation> out{two[0], tail[0], tail[1]};
  if (compose_all(out, z.degree()) != z)
    throw std::logic_error("radius-3 factorization failed validation");
  return out;
}

std::vector<Permutation> geodesic_impl(const GraphSpec& spec,
                                       const Permutation& g, int r) {
  const int k = spec.k;
  if (r == 0) return {};
  if (r == 1) return {g};

  if (k == 1) {
    // Each cycle (a1 a2 ... as) is the chain (a1 a2)(a1 a3)...(a1 as);
    // concatenating the disjoint chains spends exactly deficit(g) factors.
    std::vector<Permutation> out;
    for (const auto& c : g.cycle_decomposition())
      for (size_t i = 1; i < c.size(); ++i)
        out.push_back(transposition(g.degree(), c[0], c[static_cast<size_t>(i)]));
    return out;
  }

  if (r == 2) return factor_two_k_transpositions(g, k);
  if (k % 2 == 1 && r == 3) return radius3_factorization(spec, g);

  // r >= 3 (even k) / r >= 4 (odd k): remove the deficit overhang above the
  // previous analytic sphere, recurse on the remainder, then re-absorb the
  // peeled piece into the final one (even k) or two (odd k) factors.
  const int back = k % 2 == 0 ? 1 : 2;
  const int m = g.deficit() - (r - back) * k;
  const Permutation x = peel_factor(g, m);
  const Permutation g1 = compose(g, x.inverse());
  std::vector<Permutation> out = geodesic_impl(spec, g1, r - back);
  const Permutation z = compose(out.back(), x);
  out.pop_back();
  if (k % 2 == 0) {
    const auto two = factor_two_k_transpositions(z, k);
    out.insert(out.end(), two.begin(), two.end());
  } else {
    const auto three = radius3_factorization(spec, z);
    out.insert(out.end(), three.begin(), three.end());
  }
  return out;
}

}  // namespace

RadiusResult sphere_radius(const GraphSpec& spec, const CycleType& type) {
  if (!spec.analytic_valid())
    throw std::invalid_argument(
        "sphere_radius: closed forms not valid for " + spec.str() +
        "; use the breadth-first oracle instead");
  if (type.degree() > spec.n)
    throw std::invalid_argument("sphere_radius: type degree exceeds n");
  const CycleType t = type.embedded(spec.n);
  const int d = t.deficit();
  const int k = spec.k;

  if (spec.group() == Group::Alt && !t.is_even())
    return {std::nullopt,
            "odd permutation: not a vertex (the vertex set is the "
            "alternating group)"};
  if (d == 0) return {0, "identity"};
  if (t == spec.generator_type()) return {1, "generator class"};

  if (k == 1)
    return {d, "transposition chain: distance equals the deficit"};

  if (k == 2) {
    if (d == 2)
      return {2,
              "three-cycle exception: deficit below the generator class "
              "still needs two factors"};
    return {d / 2, "halved-deficit band: distance = deficit / 2"};
  }

  if (k % 2 == 0) {
    if (d <= 2 * k)
      return {2, "short band: non-generator with deficit at most 2k"};
    return {ceil_div(d, k), "proportional band: distance = ceil(deficit / k)"};
  }

  // odd k >= 3
  if (t.is_even())
    return {2 * ceil_div(d, 2 * k),
            "even band: distance = 2 * ceil(deficit / 2k)"};
  if (d <= 3 * k)
    return {3, "short odd band: non-generator odd class with deficit at "
               "most 3k"};
  const int q = ceil_div(d, k);
  return {q % 2 == 1 ? q : q + 1,
          "odd band: distance = ceil(deficit / k) rounded up to odd"};
}

RadiusResult sphere_radius(const GraphSpec& spec, const Permutation& g) {
  return sphere_radius(spec, g.cycle_type());
}

int radius_from_invariants(const GraphSpec& spec, int deficit,
                           bool generator_class) {
  const int d = deficit;
  const int k = spec.k;
  if (spec.group() == Group::Alt && d % 2 != 0) return -1;
  if (d == 0) return 0;
  if (generator_class) return 1;
  if (k == 1) return d;
  if (k == 2) return d == 2 ? 2 : d / 2;
  if (k % 2 == 0) return d <= 2 * k ? 2 : ceil_div(d, k);
  if (d % 2 == 0) return 2 * ceil_div(d, 2 * k);
  if (d <= 3 * k) return 3;
  const int q = ceil_div(d, k);
  return q % 2 == 1 ? q : q + 1;
}

int distance(const GraphSpec& spec, const Permutation& u,
             const Permutation& v) {
  if (u.degree() != spec.n || v.degree() != spec.n)
    throw std::invalid_argument("distance: degree must equal n");
  if (spec.group() == Group::Alt && (!u.is_even() || !v.is_even()))
    throw std::invalid_argument(
        "distance: odd permutation is not a vertex of this graph");
  // The step u -> u*h walks the graph, so u and v are joined by the
  // element taking u to v: compose(u, x) == v.
  const Permutation x = compose(u.inverse(), v);
  return *sphere_radius(spec, x).radius;
}

BigInt sphere_size(const GraphSpec& spec, int r) {
  if (r < 0) return 0;
  BigInt total = 0;
  for (const auto& type : partitions_of(spec.n)) {
    const RadiusResult rr = sphere_radius(spec, type);
    if (rr.is_vertex() && *rr.radius == r) total += type.class_size();
  }
  return total;
}

BigInt ball_size(const GraphSpec& spec, int r) {
  if (r < 0) return 0;
  BigInt total = 0;
  for (const auto& type : partitions_of(spec.n)) {
    const RadiusResult rr = sphere_radius(spec, type);
    if (rr.is_vertex() && *rr.radius <= r) total += type.class_size();
  }
  return total;
}

int diameter(const GraphSpec& spec) {
  if (!spec.analytic_valid())
    throw std::invalid_argument("diameter: closed forms not valid for " +
                                spec.str());
  const int n = spec.n;
  const int k = spec.k;
  if (k == 1) return n - 1;
  if (k % 2 == 0) return ceil_div(n - 2, k);
  // Odd k: the even and odd classes peak at different deficits; the
  // diameter is whichever band tops out higher.
  if (n % 2 == 0)
    return std::max(2 * ceil_div(n - 2, 2 * k),
                    2 * ceil_div(n - k - 1, 2 * k) + 1);
  return std::max(2 * ceil_div(n - k - 2, 2 * k) + 1,
                  2 * ceil_div(n - 1, 2 * k));
}

std::vector<std::pair<CycleType, int>> class_distance_table(
    const GraphSpec& spec) {
  std::vector<std::pair<CycleType, int>> out;
  for (const auto& type : partitions_of(spec.n)) {
    const RadiusResult rr = sphere_radius(spec, type);
    if (rr.is_vertex()) out.emplace_back(type, *rr.radius);
  }
  return out;
}

std::vector<Permutation> factor_two_k_transpositions(const Permutation& g,
                                                     int k) {
  if (k < 1)
    throw std::invalid_argument("factor-two: k must be >= 1");
  const int n = g.degree();
  const int d = g.deficit();
  if (d == 0 || d % 2 != 0)
    throw std::invalid_argument(
        "factor-two: deficit must be a positive even number (got " +
        std::to_string(d) + ")");
  const int t = d / 2;
  if (t > k)
    throw std::invalid_argument("factor-two: deficit exceeds 2k");

  // Distribute each cycle's pairing halves: short half applied first, then
  // long half, traverses the cycle, so splitting the halves between the two
  // factors reassembles g. Even-length cycles have unequal halves and must
  // alternate which factor receives the long one — their count is even
  // because the deficit is — and when x takes the long half the pairing is
  // built on the inverse cycle so the product still runs forward. Odd-length
  // cycles contribute equal halves and never unbalance the factors.
  std::vector<std::pair<int, int>> xp, yp;
  int even_seen = 0;
  for (const auto& c : g.cycle_decomposition()) {
    if (c.size() < 2) continue;
    if (c.size() % 2 == 0 && even_seen++ % 2 == 1) {
      std::vector<int> rev{c[0]};
      rev.insert(rev.end(), c.rbegin(), c.rend() - 1);
      append_half_pairs(xp, rev, /*long_half=*/true);
      append_half_pairs(yp, rev, /*long_half=*/false);
    } else {
      append_half_pairs(xp, c, /*long_half=*/false);
      append_half_pairs(yp, c, /*long_half=*/true);
    }
  }
  if (even_seen % 2 != 0)
    throw std::logic_error("factor-two: odd number of even cycles");

  // Both factors now carry t transpositions; pad them with k - t shared
  // transpositions on points g fixes (shared pieces cancel in the product).
  const auto fresh = smallest_fixed_points(g, 2 * (k - t), "factor-two");
  for (int j = 0; j + 1 < static_cast<int>(fresh.size()); j += 2) {
    xp.emplace_back(fresh[static_cast<size_t>(j)],
                    fresh[static_cast<size_t>(j) + 1]);
    yp.emplace_back(fresh[static_cast<size_t>(j)],
                    fresh[static_cast<size_t>(j) + 1]);
  }

  std::vector<Permutation> out{from_pairs(n, xp), from_pairs(n, yp)};
  if (!out[0].is_k_transposition(k) || !out[1].is_k_transposition(k) ||
      compose(out[0], out[1]) != g)
    throw std::logic_error("factor-two construction failed validation");
  return out;
}

std::vector<Permutation> geodesic_factorization(const GraphSpec& spec,
                                                const Permutation& g) {
  if (g.degree() != spec.n)
    throw std::invalid_argument("geodesic: degree must equal n");
  const RadiusResult rr = sphere_radius(spec, g);
  if (!rr.is_vertex())
    throw std::invalid_argument(
        "geodesic: odd permutation is not a vertex of this graph");
  const int r = *rr.radius;
  std::vector<Permutation> out = geodesic_impl(spec, g, r);
  if (static_cast<int>(out.size()) != r)
    throw std::logic_error("geodesic: factor count differs from distance");
  for (const auto& h : out)
    if (!h.is_k_transposition(spec.k))
      throw std::logic_error("geodesic: factor outside the generator class");
  if (compose_all(out, spec.n) != g)
    throw std::logic_error("geodesic: factors do not multiply back");
  return out;
}

Permutation compose_all(const std::vector<Permutation>& factors, int degree) {
  Permutation acc(degree);
  for (const auto& f : factors) acc = compose(acc, f);
  return acc;
}

}  // namespace caystir
