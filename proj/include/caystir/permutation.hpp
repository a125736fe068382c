#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace caystir {

class CycleType;

/// A permutation of {1..n}, stored in one-line form. Value-semantic and
/// immutable after construction; the degree n is explicit and only embed()
/// produces a copy of different degree.
///
/// Composition convention used throughout the library: compose(u, v) is the
/// map "apply u first, then v", so compose((1 2 3), (2 3)) == (1 3).
class Permutation {
 public:
  /// The identity on {1..n}. n == 0 gives the empty permutation.
  explicit Permutation(int n);

  /// From one-line images: images[i] is the image of point i+1 (1-based
  /// values). Throws std::invalid_argument unless the values are a
  /// bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  /// Parse either cycle notation "(1 2 3)(4 5)" (fixed points omissible;
  /// separators are spaces and/or commas) or one-line form "3,1,2".
  /// degree < 0 means "smallest degree containing every mentioned point".
  static Permutation parse(const std::string& text, int degree = -1);

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of the 1-based point i.
  int apply(int i) const { return images_[static_cast<size_t>(i) - 1]; }

  bool is_identity() const;

  /// Group operations. All binary operations require equal degrees and
  /// throw std::invalid_argument otherwise.
  friend Permutation compose(const Permutation& u, const Permutation& v);
  Permutation inverse() const;
  /// x^-1 g x — has the same cycle type as g.
  Permutation conjugate_by(const Permutation& x) const;

  /// Cycle structure. Fixed points count as 1-cycles, so cycle_count() of
  /// the identity is n and the "deficit" n - cycle_count() is 0 exactly on
  /// the identity.
  std::vector<std::vector<int>> cycle_decomposition() const;
  int cycle_count() const;
  int deficit() const { return degree() - cycle_count(); }
  CycleType cycle_type() const;
  int support_size() const;
  bool is_even() const { return deficit() % 2 == 0; }

  /// True iff the cycle type is 1^(n-2k) 2^k: exactly k disjoint 2-cycles.
  bool is_k_transposition(int k) const;

  /// Copy extended by fixed points up to degree m >= degree().
  Permutation embed(int m) const;

  /// Insertion map: returns the degree-(n+1) permutation that sends j to
  /// n+1 and n+1 to the old image of j (for 1 <= j <= n), or appends a
  /// fixed point (j == 0). Equivalently, for j >= 1 this is
  /// compose((j, n+1), embed(*this, n+1)).
  Permutation ins(int j) const;

  /// Deletion map: removes the top letter n, splicing its cycle if it was
  /// moved. Inverse of every ins: del(ins(g, j)) == g.
  Permutation del() const;

  /// Lexicographic rank of the one-line word among all n! permutations
  /// (factorial number system). Requires n <= 20 so the rank fits in
  /// uint64_t.
  std::uint64_t lex_rank() const;
  static Permutation from_lex_rank(int n, std::uint64_t rank);

  /// Cycle notation "(1 2 3)(4 5)"; fixed points omitted, identity prints
  /// as "()".
  std::string str() const;
  /// One-line form "3,1,2".
  std::string one_line() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;  // 1-based images; images_[i] = (i+1)^g
};

Permutation compose(const Permutation& u, const Permutation& v);

/// Transposition (a b) as an element of Sym(n).
Permutation transposition(int n, int a, int b);

}  // namespace caystir

template <>
struct std::hash<caystir::Permutation> {
  size_t operator()(const caystir::Permutation& p) const noexcept {
    size_t h = p.degree();
    for (int v : p.images())
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
