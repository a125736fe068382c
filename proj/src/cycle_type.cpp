#include "caystir/cycle_type.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace caystir {

CycleType::CycleType(std::vector<int> lengths) {
  std::map<int, int> mult;
  for (int l : lengths) {
    if (l < 1) throw std::invalid_argument("cycle length must be positive");
    ++mult[l];
    degree_ += l;
  }
  parts_.assign(mult.begin(), mult.end());
}

CycleType CycleType::identity(int n) {
  CycleType t;
  if (n > 0) t.parts_ = {{1, n}};
  t.degree_ = n;
  return t;
}

int CycleType::cycle_count() const {
  int c = 0;
  for (auto [l, k] : parts_) c += k;
  return c;
}

int CycleType::count_of(int l) const {
  for (auto [len, k] : parts_)
    if (len == l) return k;
  return 0;
}

CycleType CycleType::embedded(int m) const {
  const int s = support_size();
  if (m < s) throw std::invalid_argument("embedded: degree below support");
  CycleType t;
  t.degree_ = m;
  if (m > s) t.parts_.emplace_back(1, m - s);
  for (auto [l, k] : parts_)
    if (l > 1) t.parts_.emplace_back(l, k);
  return t;
}

BigInt CycleType::class_size() const {
  // n! over the centralizer order prod_l l^(c_l) * c_l!
  BigInt denom = 1;
  for (auto [l, c] : parts_) {
    for (int i = 0; i < c; ++i) denom *= l;
    denom *= factorial(c);
  }
  return factorial(degree_) / denom;
}

Permutation CycleType::canonical_rep() const {
  std::vector<int> w(static_cast<size_t>(degree_));
  std::iota(w.begin(), w.end(), 1);
  int next = 1;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {  // long first
    auto [l, c] = *it;
    for (int rep = 0; rep < c; ++rep) {
      for (int i = 0; i < l; ++i)
        w[static_cast<size_t>(next + i) - 1] = next + (i + 1) % l;
      next += l;
    }
  }
  return Permutation(std::move(w));
}

std::string CycleType::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto [l, c] : parts_) {
    os << (first ? "" : " ") << l << '^' << c;
    first = false;
  }
  return first ? "-" : os.str();
}

CycleType CycleType::parse(const std::string& text) {
  std::vector<int> lengths;
  size_t i = 0;
  const auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) ||
                               text[i] == ',' || text[i] == '*'))
      ++i;
  };
  const auto number = [&]() -> int {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("cycle type: expected a number");
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    return v;
  };
  skip();
  if (i < text.size() && text[i] == '-') return CycleType();  // empty type
  while (i < text.size()) {
    const int l = number();
    int c = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      c = number();
    }
    for (int rep = 0; rep < c; ++rep) lengths.push_back(l);
    skip();
  }
  return CycleType(std::move(lengths));
}

std::vector<CycleType> partitions_of(int n) {
  std::vector<CycleType> out;
  std::vector<int> parts;
  // descending-parts recursion, deterministic order
  const auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace caystir
