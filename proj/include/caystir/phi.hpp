#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "caystir/bigint.hpp"
#include "caystir/cycle_type.hpp"
#include "caystir/graph_spec.hpp"
#include "caystir/oracle.hpp"
#include "caystir/seed_cache.hpp"
#include "caystir/stirling.hpp"

namespace caystir {

/// A successful Φ evaluation: the value and the route that produced it.
struct PhiResult {
  BigInt value;
  std::string regime;  // "analytic-recursion" | "oracle" | "H-scan"
};

/// One row of a Φ table. A cell without a value is out of every exact
/// route's reach; `note` says why.
struct PhiCell {
  int r = 0;
  std::optional<BigInt> value;
  std::string regime;  // as PhiResult, or "unsupported"
  std::string note;
};

struct ReconstructionResult {
  BigInt value;
  std::vector<CycleType> argmax;  // all nonidentity classes attaining it
};

/// Computes the metric intersection numbers Φ(Γᵏₙ; r, g) = |B_r ∩ B_r g|
/// for arbitrary n, and the reconstruction numbers N(Γᵏₙ, r) built on them.
///
/// Φ is a class function of g, so everything here is keyed on cycle types.
/// Three routes, chosen per query:
///   - analytic-recursion: a seeded generalized Stirling function in n,
///     valid above a per-class threshold (k = 1: n ≥ max(s,2);
///     k = 2: r ≥ 2, n > max(s,4); k ≥ 3: r above the small radii,
///     n > max(s,4k), where s is the support of g);
///   - H-scan: r = 1 handled by counting the pairs (x, x·g⁻¹) inside
///     ({e} ∪ H)², via a support-local factorization count that agrees
///     with the literal |H| scan but does not depend on n;
///   - oracle: below the analytic thresholds the query is redirected to
///     exact brute force when the configured caps allow it.
class PhiEngine {
 public:
  /// `cache` may be null; a private memory-only seed cache is used then.
  explicit PhiEngine(GraphSpec spec, SeedCache* cache = nullptr,
                     OracleLimits limits = {});

  /// Exact Φ(Γ; r, g). Throws std::invalid_argument for a non-vertex class
  /// or negative r, std::domain_error when no exact route applies
  /// (radius-2 queries on odd-k graphs past the oracle caps, and
  /// below-threshold queries too large to enumerate).
  PhiResult phi(int r, const CycleType& g_type);
  PhiResult phi(int r, const Permutation& g);

  /// As phi(), but regime problems come back as a value-less cell with
  /// regime "unsupported" instead of a throw.
  PhiCell try_phi(int r, const CycleType& g_type);

  /// Φ for r = 0..diameter. Unsupported cells are marked, not fatal.
  std::vector<PhiCell> phi_table(const CycleType& g_type);

  /// N(Γ, r) = max Φ(r, g) over nonidentity vertex classes, with the full
  /// argmax set. Throws std::domain_error ("exact N unavailable") if any
  /// class falls in an unsupported regime.
  ReconstructionResult reconstruction_number(int r);

  /// The seeded recursion behind a class: eval_r(n, r) gives the k=1 ball
  /// intersection (PhiK1), the one-sided overlap count I_g (IRow), or the
  /// offset overlap count (CrossRow). Memoized per (class, kind, offset).
  /// Throws std::domain_error ("seed infeasible") when the class support
  /// exceeds the enumeration cap.
  StirlingFunction& stirling_for(const CycleType& g_type, SeedKind kind,
                                 int offset = 0);

  /// Φ(Γ; 1, g): the number of ways to step from B₁ into B₁g. Exact for
  /// every n; no enumeration of H.
  BigInt h_scan(const CycleType& g_type);

  const GraphSpec& spec() const { return spec_; }
  const OracleLimits& limits() const { return limits_; }

 private:
  SeedCache& active_cache() { return cache_ ? *cache_ : own_; }
  PhiCell oracle_cell(int r, const CycleType& g_type, std::string note);

  GraphSpec spec_;
  SeedCache* cache_;  // not owned
  SeedCache own_;     // memory-only fallback
  OracleLimits limits_;
  std::map<std::string, StirlingFunction> fns_;
};

}  // namespace caystir
