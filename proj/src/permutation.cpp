#include "caystir/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "caystir/cycle_type.hpp"

namespace caystir {

Permutation::Permutation(int n) : images_(static_cast<size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("negative permutation degree");
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v) - 1])
      throw std::invalid_argument("one-line form is not a bijection of {1..n}");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) return false;
  return true;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> w(u.images_.size());
  for (size_t i = 0; i < w.size(); ++i)
    w[i] = v.images_[static_cast<size_t>(u.images_[i]) - 1];
  Permutation out(0);
  out.images_ = std::move(w);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
  Permutation out(0);
  out.images_ = std::move(inv);
  return out;
}

Permutation Permutation::conjugate_by(const Permutation& x) const {
  return compose(compose(x.inverse(), *this), x);
}

std::vector<std::vector<int>> Permutation::cycle_decomposition() const {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<size_t>(i) - 1]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[static_cast<size_t>(j) - 1]; j = apply(j)) {
      seen[static_cast<size_t>(j) - 1] = 1;
      cyc.push_back(j);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

int Permutation::cycle_count() const {
  int cycles = 0;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<size_t>(i) - 1]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<size_t>(j) - 1]; j = apply(j))
      seen[static_cast<size_t>(j) - 1] = 1;
  }
  return cycles;
}

CycleType Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycle_decomposition())
    lengths.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(lengths));
}

int Permutation::support_size() const {
  int s = 0;
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) ++s;
  return s;
}

bool Permutation::is_k_transposition(int k) const {
  if (k < 1) throw std::invalid_argument("is_k_transposition: k must be >= 1");
  if (support_size() != 2 * k) return false;
  for (int i = 1; i <= degree(); ++i) {
    const int j = apply(i);
    if (j != i && apply(j) != i) return false;  // a cycle longer than 2
  }
  return true;
}

Permutation Permutation::embed(int m) const {
  if (m < degree()) throw std::invalid_argument("embed: target degree too small");
  Permutation out(m);
  std::copy(images_.begin(), images_.end(), out.images_.begin());
  return out;
}

Permutation Permutation::ins(int j) const {
  const int n = degree();
  if (j < 0 || j > n) throw std::invalid_argument("ins: j out of range");
  Permutation out = embed(n + 1);
  if (j > 0) {
    out.images_[static_cast<size_t>(j) - 1] = n + 1;
    out.images_[static_cast<size_t>(n)] = apply(j);
  }
  return out;
}

Permutation Permutation::del() const {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("del: empty permutation");
  const int img_of_top = apply(n);
  std::vector<int> w(images_.begin(), images_.end() - 1);
  if (img_of_top != n) {
    // n sat inside a cycle: splice it out by rerouting its preimage.
    for (auto& v : w)
      if (v == n) v = img_of_top;
  }
  Permutation out(0);
  out.images_ = std::move(w);
  return out;
}

std::uint64_t Permutation::lex_rank() const {
  const int n = degree();
  if (n > 20) throw std::invalid_argument("lex_rank: degree exceeds 20");
  // Factorial number system: rank = sum over positions of
  // (#smaller values to the right) * (n-1-i)!.
  std::uint64_t fact = 1;
  for (int i = 2; i < n; ++i) fact *= static_cast<std::uint64_t>(i);
  std::uint64_t rank = 0;
  std::uint64_t f = fact;  // (n-1)!
  // seen-bitmask approach is O(n^2) — fine for n <= 20
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    const int v = images_[static_cast<size_t>(i)] - 1;
    int smaller = v - std::popcount(used & ((1u << v) - 1));
    rank += static_cast<std::uint64_t>(smaller) * f;
    used |= 1u << v;
    if (i + 1 < n) f /= static_cast<std::uint64_t>(n - 1 - i);
  }
  return rank;
}

Permutation Permutation::from_lex_rank(int n, std::uint64_t rank) {
  if (n > 20) throw std::invalid_argument("from_lex_rank: degree exceeds 20");
  std::vector<std::uint64_t> fact(static_cast<size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i)
    fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i) - 1] * i;
  if (rank >= fact[static_cast<size_t>(n)])
    throw std::invalid_argument("from_lex_rank: rank out of range");
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = fact[static_cast<size_t>(i)];
    const auto idx = static_cast<size_t>(rank / f);
    rank %= f;
    w.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  Permutation out(0);
  out.images_ = std::move(w);
  return out;
}

std::string Permutation::str() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycle_decomposition()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return any ? os.str() : "()";
}

std::string Permutation::one_line() const {
  std::ostringstream os;
  for (int i = 0; i < degree(); ++i)
    os << (i ? "," : "") << images_[static_cast<size_t>(i)];
  return os.str();
}

namespace {

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("cycle notation: expected '('");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("cycle notation: expected a point");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v);
      skip_ws();
    }
    if (i >= text.size())
      throw std::invalid_argument("cycle notation: unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Permutation Permutation::parse(const std::string& text, int degree) {
  const auto first_paren = text.find('(');
  if (first_paren == std::string::npos) {
    // one-line form
    std::vector<int> w;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ','))
      if (!tok.empty()) w.push_back(std::stoi(tok));
    if (degree >= 0 && static_cast<int>(w.size()) != degree)
      throw std::invalid_argument("one-line form has wrong degree");
    return Permutation(std::move(w));
  }
  const auto cycles = parse_cycles(text);
  int max_point = 0;
  for (const auto& c : cycles)
    for (int v : c) max_point = std::max(max_point, v);
  const int n = degree < 0 ? max_point : degree;
  if (max_point > n)
    throw std::invalid_argument("cycle notation mentions a point above degree");
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const auto& c : cycles) {
    for (int v : c) {
      if (v < 1) throw std::invalid_argument("points are 1-based");
      if (seen[static_cast<size_t>(v) - 1])
        throw std::invalid_argument("point repeated across cycles");
      seen[static_cast<size_t>(v) - 1] = 1;
    }
    for (size_t i = 0; i < c.size(); ++i)
      w[static_cast<size_t>(c[i]) - 1] = c[(i + 1) % c.size()];
  }
  return Permutation(std::move(w));
}

Permutation transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw std::invalid_argument("transposition: bad points");
  Permutation out(n);
  std::vector<int> w = out.images();
  std::swap(w[static_cast<size_t>(a) - 1], w[static_cast<size_t>(b) - 1]);
  return Permutation(std::move(w));
}

}  // namespace caystir
