#include "caystir/class_enum.hpp"

#include <random>
#include <stdexcept>

#include "caystir/class_enum_detail.hpp"

namespace caystir {

bool for_each_in_class(const CycleType& type,
                       const std::function<bool(const Permutation&)>& visit) {
  detail::ClassScanState st(type);
  return detail::scan_class_rec(st, [&](const std::vector<int>& images) {
    return visit(Permutation(images));
  });
}

bool for_each_in_class_range(const CycleType& type, const BigInt& begin,
                             const BigInt& end,
                             const std::function<bool(const Permutation&)>& visit) {
  if (end <= begin) return true;
  detail::ClassScanState st(type);
  detail::ClassScanCounter counter;
  BigInt skip = begin;
  BigInt quota = end - begin;
  bool stopped_by_visitor = false;
  detail::scan_class_range_rec(st, counter, skip, quota,
                               [&](const std::vector<int>& images) {
                                 if (!visit(Permutation(images))) {
                                   stopped_by_visitor = true;
                                   return false;
                                 }
                                 return true;
                               });
  return !stopped_by_visitor;
}

Permutation unrank_in_class(const CycleType& type, const BigInt& index) {
  if (index < 0 || index >= type.class_size())
    throw std::out_of_range("unrank_in_class: index past class size");
  Permutation out(0);
  bool found = false;
  for_each_in_class_range(type, index, index + 1, [&](const Permutation& p) {
    out = p;
    found = true;
    return false;
  });
  if (!found) throw std::logic_error("unrank_in_class: enumeration came up empty");
  return out;
}

Permutation random_of_type(const CycleType& type, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = type.degree();
  std::vector<int> relabel(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) relabel[static_cast<size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(relabel[static_cast<size_t>(i)],
              relabel[static_cast<size_t>(pick(rng))]);
  }
  return type.canonical_rep().conjugate_by(Permutation(std::move(relabel)));
}

}  // namespace caystir
