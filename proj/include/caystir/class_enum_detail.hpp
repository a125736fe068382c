#pragma once

// Core class-enumeration loop as templates so hot callers (BFS over all
// generators, direct counting sweeps) pay no per-element std::function or
// allocation cost. The public std::function API in class_enum.hpp wraps
// these.

#include <map>
#include <vector>

#include "caystir/bigint.hpp"
#include "caystir/cycle_type.hpp"

namespace caystir::detail {

struct ClassScanState {
  std::vector<int> images;      // 1-based, being filled in
  std::vector<char> used;       // point placed yet?
  std::vector<int> len_of;      // distinct cycle lengths, ascending
  std::vector<int> count_of;    // remaining multiplicity per length
  int unused = 0;

  explicit ClassScanState(const CycleType& type) {
    const int n = type.degree();
    images.assign(static_cast<size_t>(n), 0);
    used.assign(static_cast<size_t>(n), 0);
    for (auto [l, c] : type.parts()) {
      len_of.push_back(l);
      count_of.push_back(c);
    }
    unused = n;
  }

  int smallest_unused() const {
    for (int p = 1; p <= static_cast<int>(used.size()); ++p)
      if (!used[static_cast<size_t>(p) - 1]) return p;
    return 0;
  }
};

/// Visits each class element's image array exactly once; visit returns
/// false to stop. Returns false iff stopped early.
template <class F>
bool scan_class_rec(ClassScanState& st, F&& visit) {
  if (st.unused == 0) return visit(const_cast<const std::vector<int>&>(st.images));
  const int p = st.smallest_unused();
  st.used[static_cast<size_t>(p) - 1] = 1;
  --st.unused;
  bool keep_going = true;
  for (size_t li = 0; keep_going && li < st.len_of.size(); ++li) {
    if (st.count_of[li] == 0) continue;
    const int l = st.len_of[li];
    --st.count_of[li];
    if (l == 1) {
      st.images[static_cast<size_t>(p) - 1] = p;
      keep_going = scan_class_rec(st, visit);
    } else {
      // extend the cycle point by point: prev -> q, closing back to p
      const auto extend = [&](auto&& self, int prev, int left) -> bool {
        if (left == 0) {
          st.images[static_cast<size_t>(prev) - 1] = p;
          return scan_class_rec(st, visit);
        }
        for (int q = 1; q <= static_cast<int>(st.used.size()); ++q) {
          if (st.used[static_cast<size_t>(q) - 1]) continue;
          st.used[static_cast<size_t>(q) - 1] = 1;
          --st.unused;
          st.images[static_cast<size_t>(prev) - 1] = q;
          const bool cont = self(self, q, left - 1);
          st.used[static_cast<size_t>(q) - 1] = 0;
          ++st.unused;
          if (!cont) return false;
        }
        return true;
      };
      keep_going = extend(extend, p, l - 1);
    }
    ++st.count_of[li];
  }
  st.used[static_cast<size_t>(p) - 1] = 0;
  ++st.unused;
  return keep_going;
}

/// Subtree sizes for the range/unrank forms: number of leaves below a
/// state, which depends only on the remaining length multiset.
class ClassScanCounter {
 public:
  BigInt leaves(const std::vector<int>& count_of, const std::vector<int>& len_of,
                int unused) {
    auto it = memo_.find(count_of);
    if (it != memo_.end()) return it->second;
    BigInt total = 0;
    bool any = false;
    std::vector<int> counts = count_of;
    for (size_t li = 0; li < len_of.size(); ++li) {
      if (counts[li] == 0) continue;
      any = true;
      const int l = len_of[li];
      --counts[li];
      // ordered (l-1)-tuples from the unused-1 points: falling factorial
      BigInt tuples = 1;
      for (int i = 0; i < l - 1; ++i) tuples *= (unused - 1 - i);
      total += tuples * leaves(counts, len_of, unused - l);
      ++counts[li];
    }
    if (!any) total = 1;
    memo_.emplace(count_of, total);
    return total;
  }

 private:
  std::map<std::vector<int>, BigInt> memo_;
};

/// Range-restricted scan over canonical indices [begin, end). The index of
/// a leaf is its position in scan_class_rec order.
template <class F>
bool scan_class_range_rec(ClassScanState& st, ClassScanCounter& counter,
                          BigInt& skip, BigInt& quota, F&& visit) {
  if (quota <= 0) return false;
  if (st.unused == 0) {
    if (skip > 0) {
      --skip;
      return true;
    }
    --quota;
    if (!visit(const_cast<const std::vector<int>&>(st.images))) return false;
    return quota > 0;
  }
  const int p = st.smallest_unused();
  st.used[static_cast<size_t>(p) - 1] = 1;
  --st.unused;
  bool keep_going = true;
  for (size_t li = 0; keep_going && li < st.len_of.size(); ++li) {
    if (st.count_of[li] == 0) continue;
    const int l = st.len_of[li];
    --st.count_of[li];
    if (skip > 0) {
      // whole-branch skip if the subtree is small enough
      BigInt tuples = 1;
      for (int i = 0; i < l - 1; ++i) tuples *= (st.unused - i);
      const BigInt below =
          tuples * counter.leaves(st.count_of, st.len_of, st.unused - (l - 1));
      if (below <= skip) {
        skip -= below;
        ++st.count_of[li];
        continue;
      }
    }
    if (l == 1) {
      st.images[static_cast<size_t>(p) - 1] = p;
      keep_going = scan_class_range_rec(st, counter, skip, quota, visit);
    } else {
      const auto extend = [&](auto&& self, int prev, int left) -> bool {
        if (left == 0) {
          st.images[static_cast<size_t>(prev) - 1] = p;
          return scan_class_range_rec(st, counter, skip, quota, visit);
        }
        for (int q = 1; q <= static_cast<int>(st.used.size()); ++q) {
          if (st.used[static_cast<size_t>(q) - 1]) continue;
          if (skip > 0) {
            BigInt tuples = 1;
            for (int i = 0; i < left - 1; ++i) tuples *= (st.unused - 1 - i);
            const BigInt below = tuples * counter.leaves(st.count_of, st.len_of,
                                                         st.unused - left);
            if (below <= skip) {
              skip -= below;
              continue;
            }
          }
          st.used[static_cast<size_t>(q) - 1] = 1;
          --st.unused;
          st.images[static_cast<size_t>(prev) - 1] = q;
          const bool cont = self(self, q, left - 1);
          st.used[static_cast<size_t>(q) - 1] = 0;
          ++st.unused;
          if (!cont) return false;
        }
        return true;
      };
      keep_going = extend(extend, p, l - 1);
    }
    ++st.count_of[li];
  }
  st.used[static_cast<size_t>(p) - 1] = 0;
  ++st.unused;
  return keep_going;
}

}  // namespace caystir::detail
