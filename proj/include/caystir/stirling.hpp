#pragma once

#include <map>
#include <string>
#include <vector>

#include "caystir/bigint.hpp"

namespace caystir {

/// A generalized Stirling function: an integer-valued f(n, m) satisfying
///
///     f(n, m) = f(n-1, m-1) + (n-1) f(n-1, m)      for n > threshold,
///     f(n, m) = 0                                  for m > n,
///
/// determined by its threshold row: explicit seed values for
/// m in [m_floor .. threshold] and a constant `tail` for every m < m_floor.
/// Rows above the threshold are materialized lazily; each extended row's
/// constant zone starts one index lower, and its tail is recomputed and
/// cross-checked against the recurrence image of the cell below the
/// materialized window (std::logic_error if the row fails to go constant —
/// that would mean the seed's tail claim was wrong).
///
/// The classical unsigned Stirling numbers of the first kind are the
/// instance threshold 1, seed {1 -> 1}, m_floor 1, tail 0.
class StirlingFunction {
 public:
  StirlingFunction(int threshold, int m_floor, std::map<int, BigInt> seed,
                   BigInt tail);

  /// Unsigned first-kind Stirling numbers c(n, m).
  static StirlingFunction classical();

  /// Ball sizes of the single-transposition graph: threshold 2,
  /// seed {2 -> 1}, tail 2; eval_r(n, r) = |B_r| in Sym(n).
  static StirlingFunction transposition_ball();

  int threshold() const { return threshold_; }
  int seed_floor() const { return m_floor_; }
  const BigInt& seed_tail() const { return seed_tail_; }

  /// Exact value f(n, m). Requires n >= threshold (the function is not
  /// defined below its seed row); throws std::domain_error otherwise.
  /// Not const: rows memoize. Concurrent readers must warm_up(n) first.
  BigInt eval(int n, int m);

  /// f(n, n-r) — the radius-indexed form used by the metric engines.
  /// Returns 0 for r < 0.
  BigInt eval_r(int n, int r);

  /// Materialize all rows up to n; afterwards eval(n', m) for n' <= n is
  /// read-only and safe from any number of threads.
  void warm_up(int n);

  /// Serialization of the defining data (not the memo):
  /// {"threshold": int, "m_floor": int, "tail": "decimal",
  ///  "seed": {"m": "decimal", ...}}. Decimal strings keep arbitrary
  /// precision intact.
  std::string to_json() const;
  static StirlingFunction from_json(const std::string& text);

 private:
  struct Row {
    int low = 0;            // lowest materialized m
    std::vector<BigInt> v;  // values for m in [low, low + v.size())
    BigInt tail;            // value for every m < low
  };

  const Row& row(int n);

  int threshold_;
  int m_floor_;
  std::map<int, BigInt> seed_;
  BigInt seed_tail_;
  std::vector<Row> rows_;  // rows_[i] is row threshold_ + 1 + i
  static const BigInt zero_;
};

}  // namespace caystir
