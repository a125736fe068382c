#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "caystir/bigint.hpp"
#include "caystir/permutation.hpp"

namespace caystir {

/// The cycle type of a permutation of {1..n}: a partition of n recorded as
/// cycle-length multiplicities, fixed points included. The unit of
/// class-level computation — distance and intersection numbers are constant
/// on conjugacy classes, so most engines key on CycleType instead of
/// Permutation.
class CycleType {
 public:
  CycleType() = default;

  /// From a list of cycle lengths (order irrelevant), e.g. {3, 2, 1}.
  explicit CycleType(std::vector<int> lengths);

  /// The type 1^n of the identity.
  static CycleType identity(int n);

  /// Parse "1^6 2^3" / "2^3" / "3 2 1" (exponent form and plain length
  /// lists both accepted; '^' binds a multiplicity).
  static CycleType parse(const std::string& text);

  int degree() const { return degree_; }
  int cycle_count() const;
  int deficit() const { return degree_ - cycle_count(); }
  bool is_even() const { return deficit() % 2 == 0; }
  /// Number of non-fixed points, n - n_1.
  int support_size() const { return degree_ - count_of(1); }
  bool is_identity() const { return support_size() == 0; }

  /// Multiplicity of cycle length l.
  int count_of(int l) const;
  /// (length, count) pairs with count > 0, lengths increasing.
  const std::vector<std::pair<int, int>>& parts() const { return parts_; }

  /// Same nontrivial cycles, degree changed to m (>= support) by adjusting
  /// the fixed-point count.
  CycleType embedded(int m) const;
  /// Minimal-degree version: no fixed points (degree == support).
  CycleType reduced() const { return embedded(support_size()); }

  /// Size of the conjugacy class in Sym(degree): n! / prod(l^c * c!).
  BigInt class_size() const;

  /// The representative whose cycles occupy consecutive points in
  /// decreasing length order: e.g. 1^1 2^2 at n=5 -> (1 2)(3 4).
  Permutation canonical_rep() const;

  /// "1^6 2^3" — lengths ascending, exponents always written.
  std::string str() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend std::strong_ordering operator<=>(const CycleType& a,
                                          const CycleType& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<std::pair<int, int>> parts_;  // (length, count), ascending
  int degree_ = 0;
};

/// Every cycle type of Sym(n), i.e. all partitions of n,
/// in a deterministic order.
std::vector<CycleType> partitions_of(int n);

/// n! as an exact integer.
BigInt factorial(int n);

}  // namespace caystir
