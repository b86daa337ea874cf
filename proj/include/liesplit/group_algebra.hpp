#pragma once

#include <cstdint>
#include <vector>

#include "liesplit/field.hpp"

namespace liesplit {

// Permutation of {0..n-1}; perm[i] is the image of i.
using Perm = std::vector<std::uint8_t>;

constexpr int kMaxGroupDegree = 8;

std::uint64_t factorial(int n);
// all permutations of degree n in lexicographic order of image sequences
const std::vector<Perm>& all_perms(int n);
std::size_t perm_rank(const Perm& s);
Perm identity_perm(int n);
Perm inverse_perm(const Perm& s);
// The product used throughout: (s * t)(i) = t(s(i)). With it the position
// action on words is a left action and letter relabelling on multilinear
// words is a right action.
Perm star(const Perm& s, const Perm& t);
// adjacent transposition swapping i and i+1 (0-based)
Perm adjacent(int n, int i);
// s = adjacent(i1) * adjacent(i2) * ... (star product), list of i's
std::vector<int> reduced_word(const Perm& s);
// rank-indexed product table for n <= 7
const std::vector<std::uint16_t>& star_table(int n);

// Element of k(Sigma_n), dense over ranks.
struct GroupAlgebraElement {
  FieldPtr field;
  int n = 0;
  std::vector<Scalar> coeffs;

  GroupAlgebraElement() = default;
  GroupAlgebraElement(FieldPtr f, int deg);
  static GroupAlgebraElement identity(FieldPtr f, int deg);
  static GroupAlgebraElement basis(FieldPtr f, const Perm& s);

  Scalar coeff(const Perm& s) const { return coeffs[perm_rank(s)]; }
  bool is_zero() const;
  std::size_t support_size() const;
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n == b.n && a.coeffs == b.coeffs;
  }
};

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement scale(Scalar c, const GroupAlgebraElement& a);
// algebra product for the star group law
GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement power(const GroupAlgebraElement& a, std::uint64_t k);

}  // namespace liesplit
