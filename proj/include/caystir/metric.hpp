#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caystir/bigint.hpp"
#include "caystir/cycle_type.hpp"
#include "caystir/graph_spec.hpp"
#include "caystir/permutation.hpp"

namespace caystir {

/// Distance of a conjugacy class from the identity, together with a short
/// description of the rule that determined it (surfaced by the CLI).
/// `radius` is empty when the class is not a vertex of the graph (odd
/// permutations when the vertex group is the alternating group).
struct RadiusResult {
  std::optional<int> radius;
  std::string clause;

  bool is_vertex() const { return radius.has_value(); }
};

/// Exact distance from the identity for every element of the given cycle
/// type, by the closed-form case analysis. Requires spec.analytic_valid().
/// Types of degree below n are treated as padded with fixed points.
RadiusResult sphere_radius(const GraphSpec& spec, const CycleType& type);
RadiusResult sphere_radius(const GraphSpec& spec, const Permutation& g);

/// Allocation-free core of the same case analysis: the radius depends only
/// on the deficit and on whether the class is the generator class (parity
/// is the deficit mod 2). Returns -1 for a non-vertex. Unit tests pin this
/// against sphere_radius over every cycle type.
int radius_from_invariants(const GraphSpec& spec, int deficit,
                           bool generator_class);

/// Graph distance between two vertices (throws if either is not a vertex).
int distance(const GraphSpec& spec, const Permutation& u,
             const Permutation& v);

/// Number of vertices at distance exactly r / at most r from the identity,
/// as a sum of conjugacy-class sizes over the classes the case analysis
/// assigns to that radius.
BigInt sphere_size(const GraphSpec& spec, int r);
BigInt ball_size(const GraphSpec& spec, int r);

/// Exact diameter from the closed forms. For k = 2 and n in {5, 6, 7} the
/// same expression ceil((n-2)/2) is used; those three values sit below the
/// formula's general validity range and are pinned by exhaustive
/// breadth-first search in the test suite.
int diameter(const GraphSpec& spec);

/// (cycle type, radius) for every vertex class of Sym(n)/Alt(n), in the
/// enumeration order of partitions_of(n). Non-vertex classes are omitted.
std::vector<std::pair<CycleType, int>> class_distance_table(
    const GraphSpec& spec);

/// Writes g as a product of exactly two k-transpositions x, y with
/// compose(x, y) == g. Requires deficit(g) = 2t for some 1 <= t <= k; when
/// t < k the construction pads both factors with k - t shared transpositions
/// on the smallest points fixed by g, and throws if fewer than 2(k - t)
/// such points exist. Deterministic: cycles are processed in order of their
/// smallest moved point.
std::vector<Permutation> factor_two_k_transpositions(const Permutation& g,
                                                     int k);

/// Writes a vertex g as a product of exactly distance(e, g) generators
/// (empty product for the identity). Requires spec.analytic_valid().
std::vector<Permutation> geodesic_factorization(const GraphSpec& spec,
                                                const Permutation& g);

/// Left-to-right product of a factor list (identity for an empty list).
Permutation compose_all(const std::vector<Permutation>& factors, int degree);

}  // namespace caystir
