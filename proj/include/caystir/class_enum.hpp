#pragma once

#include <cstdint>
#include <functional>

#include "caystir/bigint.hpp"
#include "caystir/cycle_type.hpp"
#include "caystir/permutation.hpp"

namespace caystir {

/// Visit every element of the conjugacy class of the given type, exactly
/// once each, in a deterministic order. The visitor returns false to stop
/// early; for_each_in_class returns false iff it was stopped.
///
/// Enumeration scheme: the smallest point not yet placed always starts the
/// next cycle, branches run over the distinct cycle lengths still needed
/// (ascending) and then over ordered tuples of the remaining members. This
/// yields each class element once, and gives every element a canonical
/// index 0..class_size-1 used by the range form below.
bool for_each_in_class(const CycleType& type,
                       const std::function<bool(const Permutation&)>& visit);

/// Range form over canonical indices [begin, end): used to partition a
/// class across threads. Skipping to `begin` costs O(n^2) subtree-size
/// arithmetic, not O(begin).
bool for_each_in_class_range(const CycleType& type, const BigInt& begin,
                             const BigInt& end,
                             const std::function<bool(const Permutation&)>& visit);

/// The element at a canonical index (0-based). Throws std::out_of_range
/// past the class size.
Permutation unrank_in_class(const CycleType& type, const BigInt& index);

/// A uniformly random element of the class, reproducible from the seed
/// (canonical representative conjugated by a Fisher-Yates shuffle).
Permutation random_of_type(const CycleType& type, std::uint64_t seed);

}  // namespace caystir
