#include <set>

#include "doctest.h"
#include "liesplit/error.hpp"
#include "liesplit/lie.hpp"
#include "liesplit/natural.hpp"

using namespace liesplit;

namespace {

Tensor x(FieldPtr f, int m, Word w) { return Tensor::word(f, m, w); }

// smaller than every proper rotation, by brute force over all words
std::size_t lyndon_count_oracle(int n, int m) {
  std::size_t c = 0;
  for (std::uint64_t i = 0; i < ipow(m, n); ++i) {
    Word w = index_word(i, m, n);
    bool ok = true;
    for (int r = 1; r < n && ok; ++r) {
      Word rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      ok = w < rot;
    }
    c += ok;
  }
  return c;
}

std::size_t hom_dim_oracle(const SigmaModule& M, const SigmaModule& N) {
  const Field& f = *M.field;
  std::size_t dM = M.dim, dN = N.dim, U = dM * dN;
  Matrix sys(0, U);
  for (std::size_t s = 0; s < M.actions.size(); ++s)
    for (std::size_t i = 0; i < dM; ++i)
      for (std::size_t j = 0; j < dN; ++j) {
        std::vector<Scalar> r(U);
        for (std::size_t k = 0; k < dM; ++k) r[k * dN + j] = f.add(r[k * dN + j], M.actions[s](i, k));
        for (std::size_t k = 0; k < dN; ++k) r[i * dN + k] = f.sub(r[i * dN + k], N.actions[s](k, j));
        sys.append_row(r);
      }
  return U - rank(f, transpose(sys));
}

}  // namespace

TEST_CASE("brackets") {
  for (int p : {2, 3}) {
    auto f = field_ptr(p, 1);
    CHECK(bracket(x(f, 3, {1}), x(f, 3, {1})).is_zero());
    CHECK(bracket(x(f, 3, {1}), x(f, 3, {2})) == x(f, 3, {1, 2}) - x(f, 3, {2, 1}));
    auto a = x(f, 3, {1}), b = x(f, 3, {2}), c = x(f, 3, {3});
    CHECK((bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)).is_zero());
  }
  CHECK_THROWS_AS(bracket(x(field_ptr(2, 1), 2, {1}), x(field_ptr(3, 1), 2, {1})), Error);
}

TEST_CASE("left normed projection") {
  auto f = field_ptr(5, 1);
  CHECK(left_normed(x(f, 2, {1, 2})) == x(f, 2, {1, 2}) - x(f, 2, {2, 1}));
  CHECK(left_normed(x(f, 2, {2})) == x(f, 2, {2}));
  for (int p : {2, 3, 5})
    for (int m : {2, 3})
      for (int n = 1; n <= 5; ++n) {
        auto g = field_ptr(p, 1);
        for (const auto& w : lyndon_words(n, m)) {
          Tensor b = bracketed(w.letters, m, g);
          CHECK(left_normed(b) == scale(g->from_int(n), b));
        }
      }
}

TEST_CASE("Lyndon words") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 8; ++n) {
      auto ws = lyndon_words(n, m);
      CHECK(ws.size() == lyndon_count_oracle(n, m));
      CHECK(std::int64_t(ws.size()) == witt_dim(n, m));
      for (std::size_t i = 0; i < ws.size(); ++i) {
        CHECK(is_lyndon(ws[i].letters));
        if (i) CHECK(ws[i - 1].letters < ws[i].letters);
        if (n >= 2) {
          auto [l, r] = ws[i].standard_factorization;
          CHECK(is_lyndon(l));
          CHECK(is_lyndon(r));
          const Word& full = ws[i].letters;
          for (std::size_t k = r.size() + 1; k < full.size(); ++k) CHECK_FALSE(is_lyndon(Word(full.end() - k, full.end())));
        }
      }
    }
  auto sf = standard_factorization(Word{1, 1, 2, 1, 2});
  CHECK(sf.first == Word{1, 1, 2});
  CHECK(sf.second == Word{1, 2});
}

TEST_CASE("Witt dimensions") {
  CHECK(witt_dim(1, 7) == 7);
  CHECK(witt_dim(12, 2) == 335);
  CHECK(witt_dim(6, 2) == 9);
  CHECK(witt_dim(2, 2) == 1);
  CHECK(witt_dim(3, 2) == 2);
  CHECK(witt_dim(4, 1) == 0);
  CHECK_THROWS_AS(witt_dim(40, 1000000), Error);
}

TEST_CASE("Lyndon bases span the Lie powers") {
  for (int p : {2, 3}) {
    auto f = field_ptr(p, 1);
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= (m == 3 ? 6 : 8); ++n) {
        auto L = lyndon_basis(n, m, f);
        CHECK(std::int64_t(L.dim()) == witt_dim(n, m));
        Matrix rows(0, ipow(m, n));
        for (std::uint64_t i = 0; i < ipow(m, n); ++i)
          rows.append_row(to_dense(left_normed(Tensor::word(f, m, index_word(i, m, n)))));
        CHECK(Subspace::span(*f, rows) == L);
      }
  }
  auto f = field_ptr(2, 1);
  auto L2 = lyndon_basis(2, 2, f);
  CHECK(L2.contains(*f, to_dense(x(f, 2, {1, 2}) - x(f, 2, {2, 1}))));
}

TEST_CASE("restricted Lie powers are the primitives") {
  for (int p : {2, 3}) {
    auto f = field_ptr(p, 1);
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 6; ++n) CHECK(restricted_lie_power(n, m, f) == primitives(n, m, f));
  }
  auto f = field_ptr(2, 1);
  CHECK(restricted_lie_power(2, 1, f).dim() == 1);
  CHECK(lyndon_basis(2, 1, f).dim() == 0);
  CHECK(restricted_lie_power(2, 2, f).dim() == 3);
  CHECK(restricted_lie_power(5, 2, f) == lyndon_basis(5, 2, f));
  auto f4 = field_ptr(2, 2);
  CHECK(restricted_lie_power(4, 2, f4) == primitives(4, 2, f4));
}

TEST_CASE("the module Lie(n)") {
  auto f = field_ptr(2, 1);
  for (int n = 1; n <= 5; ++n) {
    auto L = lie_module(n, f);
    CHECK(L.module.dim == factorial(n - 1));
    CHECK(check_module(L.module));
  }
  auto L2 = lie_module(2, f);
  CHECK(L2.basis[0] == x(f, 2, {1, 2}) + x(f, 2, {2, 1}));
  CHECK(L2.module.actions[0] == identity(1));
  auto L3 = lie_module(3, f);
  for (const auto& b : L3.basis) CHECK(b.terms.size() == 4);  // signs collapse: xyz - yxz - zxy + zyx
  auto L3p = lie_module(3, field_ptr(5, 1));
  for (const auto& b : L3p.basis) CHECK(b.terms.size() == 4);
  CHECK_THROWS_AS(lie_module(8, f), Error);
}

TEST_CASE("gamma of the Lie powers is Lie(n)") {
  for (int p : {2, 3}) {
    auto f = field_ptr(p, 1);
    for (int n = 2; n <= 5; ++n) {
      auto G = gamma(f, lyndon_basis(n, n, f), lyndon_basis(n, n - 1, f), n, n);
      auto L = lie_module(n, f);
      CHECK(G.dim == L.module.dim);
      CHECK(Subspace::span(*f, G.ambient->basis) == Subspace::span(*f, L.module.ambient->basis));
    }
  }
}

TEST_CASE("theta at a cube root of unity kills Lie(3)") {
  auto f = field_ptr(2, 2);
  Scalar w = f->x();
  auto th = theta(f, w, 3);
  for (const auto& b : lie_module(3, f).basis) CHECK(apply(th, b).is_zero());
  auto L2 = lie_module(2, f);
  CHECK(apply(th, L2.basis[0]) == scale(f->sub(f->mul(w, w), f->one()), L2.basis[0]));
}

TEST_CASE("endomorphisms of Lie(3)") {
  auto f = field_ptr(2, 1);
  auto L = lie_module(3, f).module;
  CHECK(hom_dim(L, L) == hom_dim_oracle(L, L));
  CHECK(hom_dim(L, L) == 1);
  CHECK(is_projective(L).projective);
  auto g = field_ptr(3, 1);
  auto L3 = lie_module(3, g).module;
  CHECK(hom_dim(L3, L3) == hom_dim_oracle(L3, L3));
  CHECK_FALSE(is_projective(L3).projective);
  auto L4 = lie_module(4, f).module;
  CHECK(hom_dim(L4, L4) == hom_dim_oracle(L4, L4));
}
