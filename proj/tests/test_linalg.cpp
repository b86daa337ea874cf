#include <random>

#include "doctest.h"
#include "liesplit/linalg.hpp"

using namespace liesplit;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng, int zero_bias = 0) {
  Matrix m(r, c);
  for (auto& s : m.data) {
    s = {std::uint32_t(rng() % f.size())};
    if (zero_bias && rng() % zero_bias) s = {0};
  }
  return m;
}

}  // namespace

TEST_CASE("rank-nullity and kernels") {
  std::mt19937 rng(7);
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 4}}) {
    Field f(make_field(p, e));
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t r = 1 + rng() % 30, c = 1 + rng() % 30;
      Matrix a = random_matrix(f, r, c, rng, 3);
      std::size_t rk = rank(f, a);
      Matrix k = right_kernel(f, a);
      CHECK(rk + k.rows == c);
      CHECK(is_zero(multiply(f, a, transpose(k))));
      Matrix lk = left_kernel(f, a);
      CHECK(rk + lk.rows == r);
      CHECK(is_zero(multiply(f, lk, a)));
    }
  }
}

TEST_CASE("gf2 bit path matches generic elimination") {
  std::mt19937 rng(11);
  Field f2(make_field(2, 1));
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(f2, 40, 150, rng, 4);
    Matrix b = a;
    rref(f2, a);
    // generic path: eliminate row by row in chunks of at most 8 rows
    Subspace s(150);
    for (std::size_t i = 0; i < b.rows; ++i) s = sum(f2, s, Subspace::span(f2, 150, {b.row_vec(i)}));
    CHECK(s.basis() == a);
  }
}

TEST_CASE("inverse and subspace operations") {
  std::mt19937 rng(3);
  Field f(make_field(3, 2));
  Matrix a = random_matrix(f, 6, 6, rng);
  while (!invertible(f, a)) a = random_matrix(f, 6, 6, rng);
  CHECK(multiply(f, a, inverse(f, a)) == identity(6));

  Matrix u = random_matrix(f, 4, 10, rng), w = random_matrix(f, 5, 10, rng);
  Matrix shared = random_matrix(f, 2, 10, rng);
  u.append_rows(shared);
  w.append_rows(shared);
  Subspace U = Subspace::span(f, u), W = Subspace::span(f, w);
  Subspace I = intersect(f, U, W), S = sum(f, U, W);
  CHECK(I.dim() + S.dim() == U.dim() + W.dim());
  CHECK(U.contains(f, I));
  CHECK(W.contains(f, I));
  Subspace C = complement(f, U, I);
  CHECK(C.dim() + I.dim() == U.dim());
  CHECK(sum(f, C, I) == U);
  for (std::size_t i = 0; i < U.dim(); ++i) {
    auto v = U.basis().row_vec(i);
    auto c = U.coordinates(f, v);
    CHECK(row_times(f, c, U.basis()) == v);
  }
}
