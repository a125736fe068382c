#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "caystir/bigint.hpp"
#include "caystir/cycle_type.hpp"
#include "caystir/graph_spec.hpp"
#include "caystir/permutation.hpp"
#include "caystir/stirling.hpp"

namespace caystir {

/// Resource limits for the brute-force engines. All are configuration, not
/// constants; the defaults keep every computation within commodity RAM and
/// the documented time budgets.
struct OracleLimits {
  /// Maximum group order for the element-level BFS (distance array is one
  /// byte per element of Sym(n), so memory is n! bytes regardless of the
  /// vertex group). 2e6 admits Sym(9) and Alt(10).
  std::uint64_t element_cap = 2'000'000;
  /// Maximum (number of cycle types) x (generator class size) for the
  /// class-level BFS. 4e8 admits k=3 up to n=14 and k=4 at n=16.
  std::uint64_t class_budget = 400'000'000;
  /// Maximum degree for full-group deficit scans (n! iterations).
  int enumeration_cap = 10;
  /// Opt-in for the slow streaming route of phi_direct (no distance array;
  /// usable at n = 11..12 where the closed forms provide membership).
  bool allow_streaming = false;
};

/// Exact breadth-first distances from the identity over the whole vertex
/// group, independent of every closed-form formula in the library (the
/// point: formulas are tested against this, so it must not consult them).
/// Distances are stored per lexicographic rank, one byte each.
class ElementBfs {
 public:
  ElementBfs(const GraphSpec& spec, const OracleLimits& limits = {});

  const GraphSpec& spec() const { return spec_; }

  /// Number of vertices reached (= |Sym(n)| or |Alt(n)|).
  std::uint64_t order() const { return order_; }

  /// Distance from the identity; throws std::invalid_argument for a
  /// permutation outside the vertex group.
  int distance_of(const Permutation& v) const;

  /// Largest distance reached — the diameter, since the graph is
  /// vertex-transitive.
  int eccentricity() const { return ecc_; }

  /// counts[r] = number of vertices at distance exactly r.
  std::vector<std::uint64_t> sphere_histogram() const;

  /// Distance per cycle type, verifying along the way that the distance is
  /// constant on every class (throws std::logic_error if not — that would
  /// falsify conjugation-invariance, not a configuration problem).
  std::map<CycleType, int> class_distances() const;

  /// Phi(r, g) = |B_r(e) ∩ B_r(g)| by direct intersection of the two balls.
  BigInt phi(int r, const Permutation& g) const;

 private:
  GraphSpec spec_;
  std::vector<std::uint8_t> dist_;  // by lex rank; 0xFF = not a vertex
  std::uint64_t order_ = 0;
  int ecc_ = 0;
};

/// Class-level BFS: one canonical representative per frontier type is
/// multiplied by every generator, so the cost is (#types reached) x |H|
/// products instead of |G| x |H|. Exact because distance from the identity
/// is a class function.
struct ClassBfsResult {
  /// Types in the order partitions_of(n) yields them, vertex classes only.
  std::vector<std::pair<CycleType, int>> distances;
  int diameter = 0;
};
ClassBfsResult class_bfs(const GraphSpec& spec, const OracleLimits& limits = {});

/// Joint tally of (deficit(x), deficit(x g^-1)) over all x in Sym(n).
/// One n! scan answers every intersection question this library asks of a
/// fixed g: the parity of a permutation is determined by its deficit, so
/// parity filters are filters on the second coordinate.
class DeficitPairHistogram {
 public:
  /// n! enumeration; requires g.degree() <= limits.enumeration_cap.
  static DeficitPairHistogram scan(const Permutation& g,
                                   const OracleLimits& limits = {});

  int degree() const { return n_; }

  /// #{x : deficit(x) <= c1, deficit(x g^-1) <= c2, and (if d2_parity is
  /// 0 or 1) deficit(x g^-1) ≡ d2_parity (mod 2)}. d2_parity = -1 disables
  /// the parity filter. Negative c1/c2 give 0.
  BigInt count_leq(int c1, int c2, int d2_parity) const;

 private:
  int n_ = 0;
  std::vector<std::vector<std::uint64_t>> counts_;  // [d1][d2]
};

/// I_g(n, r): the x in Sym(n) with deficit(x) <= r, deficit(x g^-1) <= r and
/// deficit(x g^-1) ≡ r (mod 2). Fresh n! scan per call — fine for the small
/// degrees this runs at; use DeficitPairHistogram directly in hot loops.
BigInt i_g_direct(int n, int r, const Permutation& g,
                  const OracleLimits& limits = {});

/// The shifted-overlap count: x with deficit(x) <= rho,
/// deficit(x g^-1) <= rho - offset and deficit(x g^-1) ≡ rho - offset
/// (mod 2); zero when rho < offset. This is the one-Stirling-function
/// answer to ball intersections whose two radii differ by `offset`.
BigInt shifted_overlap_direct(int rho, int offset, const Permutation& g,
                              const OracleLimits& limits = {});

/// Phi(r, g) by brute force: BFS route when the group order fits
/// limits.element_cap; otherwise, with limits.allow_streaming and the
/// closed forms valid, a rank-by-rank streaming scan that never stores a
/// distance array. Throws when neither route is permitted.
BigInt phi_direct(const GraphSpec& spec, int r, const Permutation& g,
                  const OracleLimits& limits = {});

/// Which seeded recursion a row drives. PhiK1 rows hold Phi values of the
/// single-transposition graph; IRow rows hold I_g values; CrossRow rows
/// hold shifted-overlap values for a fixed radius offset.
enum class SeedKind { PhiK1, IRow, CrossRow };
std::string seed_kind_name(SeedKind kind);
SeedKind seed_kind_from_name(const std::string& name);

/// The threshold row that determines a g-indexed Stirling function:
/// exhaustively computed values at degree t = max(support, 2), plus the
/// constant tail the row stabilizes to.
struct SeedRow {
  SeedKind kind = SeedKind::IRow;
  CycleType type;            // reduced cycle type of g (no fixed points)
  int offset = 0;            // radius offset; nonzero only for CrossRow
  int threshold = 2;         // t = max(support, 2)
  int m_floor = 0;
  BigInt tail;
  std::map<int, BigInt> row;  // r -> value, r = 0 .. threshold - m_floor

  StirlingFunction to_stirling() const;

  std::string to_json() const;
  static SeedRow from_json(const std::string& text);

  /// Cache-key string: kind, reduced type, and offset when nonzero.
  std::string key() const;
};

/// Computes a seed row by exhaustive enumeration of Sym(t).
/// Requires t = max(support of type, 2) <= limits.enumeration_cap.
SeedRow compute_seed_row(SeedKind kind, const CycleType& type, int offset = 0,
                         const OracleLimits& limits = {});

}  // namespace caystir
