#include "caystir/phi.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "caystir/metric.hpp"

namespace caystir {
namespace {

// Number of ways to place m disjoint transpositions on f unlabeled-free
// points: f! / (2^m m! (f-2m)!), computed without the full factorials.
BigInt placements_of_transpositions(int f, int m) {
  if (m < 0 || 2 * m > f) return 0;
  BigInt num = 1;
  for (int i = 0; i < 2 * m; ++i) num *= BigInt(f - i);
  BigInt den = factorial(m);
  for (int i = 0; i < m; ++i) den *= 2;
  return num / den;
}

}  // namespace

PhiEngine::PhiEngine(GraphSpec spec, SeedCache* cache, OracleLimits limits)
    : spec_(spec), cache_(cache), own_(), limits_(limits) {}

StirlingFunction& PhiEngine::stirling_for(const CycleType& g_type,
                                          SeedKind kind, int offset) {
  const CycleType red = g_type.reduced();
  const int t = std::max(red.degree(), 2);
  if (t > limits_.enumeration_cap) {
    throw std::domain_error(
        "seed infeasible: class " + red.str() + " needs a degree-" +
        std::to_string(t) + " enumeration, above the cap of " +
        std::to_string(limits_.enumeration_cap));
  }
  SeedRow probe;
  probe.kind = kind;
  probe.type = red;
  probe.offset = (kind == SeedKind::CrossRow) ? offset : 0;
  const std::string key = probe.key();
  auto it = fns_.find(key);
  if (it == fns_.end()) {
    const SeedRow& row = active_cache().get(kind, red, probe.offset);
    it = fns_.emplace(key, row.to_stirling()).first;
  }
  return it->second;
}

BigInt PhiEngine::h_scan(const CycleType& g_type) {
  const int k = spec_.k;
  const int n = spec_.n;
  const CycleType gen = spec_.generator_type();
  if (g_type.is_identity()) return BigInt(1) + gen.class_size();

  // x = g and x = e each pair with the other iff g itself is a generator.
  BigInt total = (g_type == gen) ? 2 : 0;

  // Remaining pairs have x and x·g⁻¹ both in H, forcing g into a product of
  // two k-transpositions: even deficit at most 2k.
  const int d = g_type.deficit();
  if (d % 2 != 0 || d > 2 * k) return total;

  // Such a pair splits into "active" transpositions supported inside
  // supp(g) and transpositions shared by both factors, disjoint from
  // supp(g) (they cancel in the product). Count active skeletons on the
  // reduced class once, then multiply by the placements of the shared part
  // on the n - s fixed points.
  const CycleType red = g_type.reduced();
  const int s = red.degree();
  const Permutation g = red.canonical_rep();
  const std::vector<int> gi = g.images();

  const int a_lo = std::max((d + 1) / 2, (s + 3) / 4);
  const int a_hi = std::min(k, s / 2);
  if (a_lo > a_hi) return total;

  std::vector<BigInt> skeletons(static_cast<size_t>(a_hi) + 1, BigInt(0));
  std::vector<int> x(static_cast<size_t>(s));
  for (int i = 0; i < s; ++i) x[static_cast<size_t>(i)] = i + 1;

  const auto accept = [&](int a) {
    // z = x∘g (apply g, then x) must be an involution moving exactly 2a
    // points; then x and z·(shared part) are the two H-factors of g.
    int moved = 0;
    for (int i = 1; i <= s; ++i) {
      const int zi = x[static_cast<size_t>(gi[static_cast<size_t>(i - 1)] - 1)];
      if (zi == i) continue;
      const int zzi =
          x[static_cast<size_t>(gi[static_cast<size_t>(zi - 1)] - 1)];
      if (zzi != i) return false;
      ++moved;
    }
    return moved == 2 * a;
  };

  std::function<void(int, int)> extend = [&](int p, int pairs) {
    if (p > s) {
      if (pairs >= a_lo && accept(pairs)) ++skeletons[static_cast<size_t>(pairs)];
      return;
    }
    if (pairs + (s - p + 1) / 2 < a_lo) return;  // can't reach a_lo
    if (x[static_cast<size_t>(p - 1)] != p) {    // already matched earlier
      extend(p + 1, pairs);
      return;
    }
    extend(p + 1, pairs);  // p left fixed
    if (pairs == a_hi) return;
    for (int q = p + 1; q <= s; ++q) {
      if (x[static_cast<size_t>(q - 1)] != q) continue;
      x[static_cast<size_t>(p - 1)] = q;
      x[static_cast<size_t>(q - 1)] = p;
      extend(p + 1, pairs + 1);
      x[static_cast<size_t>(p - 1)] = p;
      x[static_cast<size_t>(q - 1)] = q;
    }
  };
  extend(1, 0);

  for (int a = a_lo; a <= a_hi; ++a) {
    total += skeletons[static_cast<size_t>(a)] *
             placements_of_transpositions(n - s, k - a);
  }
  return total;
}

PhiCell PhiEngine::oracle_cell(int r, const CycleType& g_type,
                               std::string note) {
  PhiCell cell;
  cell.r = r;
  try {
    const Permutation g = g_type.canonical_rep();
    cell.value = phi_direct(spec_, r, g, limits_);
    cell.regime = "oracle";
  } catch (const std::domain_error& e) {
    cell.regime = "unsupported";
    cell.note = std::move(note);
    cell.note += " (";
    cell.note += e.what();
    cell.note += ")";
  }
  return cell;
}

PhiCell PhiEngine::try_phi(int r, const CycleType& g_type) {
  if (r < 0) throw std::invalid_argument("phi: negative radius");
  if (g_type.degree() != spec_.n) {
    throw std::invalid_argument("phi: class degree " +
                                std::to_string(g_type.degree()) +
                                " does not match n = " +
                                std::to_string(spec_.n));
  }
  if (spec_.group() == Group::Alt && !g_type.is_even()) {
    throw std::invalid_argument("phi: odd class " + g_type.str() +
                                " is not a vertex of " + spec_.str());
  }

  const int k = spec_.k;
  const int n = spec_.n;
  const CycleType red = g_type.reduced();
  const int s = red.degree();

  PhiCell cell;
  cell.r = r;

  if (r == 0) {
    // B₀ ∩ B₀g = {e} ∩ {g}.
    cell.value = BigInt(g_type.is_identity() ? 1 : 0);
    cell.regime = "analytic-recursion";
    return cell;
  }

  if (k == 1) {
    // Valid for every n ≥ max(s,2) and every r; at n = threshold the seed
    // row itself is the answer.
    try {
      cell.value = stirling_for(red, SeedKind::PhiK1).eval_r(n, r);
      cell.regime = "analytic-recursion";
    } catch (const std::domain_error& e) {
      cell.regime = "unsupported";
      cell.note = e.what();
    }
    return cell;
  }

  if (r == 1) {
    cell.value = h_scan(g_type);
    cell.regime = "H-scan";
    return cell;
  }

  // k ≥ 2, r ≥ 2 from here on.
  const int bound = (k == 2) ? std::max(s, 4) : std::max(s, 4 * k);

  if (k % 2 == 1 && r == 2) {
    // The radius-2 ball of an odd-k graph contains the bare generator
    // class, which no cycle-count condition captures; only brute force.
    return oracle_cell(
        r, g_type,
        "unsupported regime: radius 2 on an odd-k graph has no recursion");
  }

  if (n > bound) {
    try {
      if (k % 2 == 0) {
        cell.value = stirling_for(red, SeedKind::IRow).eval_r(n, r * k);
      } else if (g_type.is_even()) {
        StirlingFunction& f = stirling_for(red, SeedKind::IRow);
        cell.value = f.eval_r(n, r * k) + f.eval_r(n, (r - 1) * k);
      } else {
        StirlingFunction& f = stirling_for(red, SeedKind::CrossRow, k);
        cell.value = BigInt(2) * f.eval_r(n, r * k);
      }
      cell.regime = "analytic-recursion";
    } catch (const std::domain_error& e) {
      cell.regime = "unsupported";
      cell.note = e.what();
    }
    return cell;
  }

  return oracle_cell(r, g_type,
                     "below threshold: n <= max(support, " +
                         std::to_string(k == 2 ? 4 : 4 * k) +
                         ") has no analytic route");
}

PhiResult PhiEngine::phi(int r, const CycleType& g_type) {
  PhiCell cell = try_phi(r, g_type);
  if (!cell.value) throw std::domain_error(cell.note);
  return PhiResult{std::move(*cell.value), std::move(cell.regime)};
}

PhiResult PhiEngine::phi(int r, const Permutation& g) {
  return phi(r, g.cycle_type());
}

std::vector<PhiCell> PhiEngine::phi_table(const CycleType& g_type) {
  const int diam = diameter(spec_);
  std::vector<PhiCell> rows;
  rows.reserve(static_cast<size_t>(diam) + 1);
  for (int r = 0; r <= diam; ++r) rows.push_back(try_phi(r, g_type));
  return rows;
}

ReconstructionResult PhiEngine::reconstruction_number(int r) {
  if (r < 0) throw std::invalid_argument("reconstruction number: negative r");
  ReconstructionResult res;
  bool any = false;
  for (const CycleType& type : partitions_of(spec_.n)) {
    if (type.is_identity()) continue;
    if (spec_.group() == Group::Alt && !type.is_even()) continue;
    PhiCell cell = try_phi(r, type);
    if (!cell.value) {
      throw std::domain_error("exact N unavailable: class " + type.str() +
                              " — " + cell.note);
    }
    if (!any || *cell.value > res.value) {
      res.value = *cell.value;
      res.argmax.clear();
      res.argmax.push_back(type);
      any = true;
    } else if (*cell.value == res.value) {
      res.argmax.push_back(type);
    }
  }
  if (!any) {
    throw std::domain_error("reconstruction number: no nonidentity classes");
  }
  return res;
}

}  // namespace caystir
