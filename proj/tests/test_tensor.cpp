#include <random>

#include "doctest.h"
#include "liesplit/error.hpp"
#include "liesplit/tensor.hpp"

using namespace liesplit;

namespace {

using Triple = std::map<std::tuple<Word, Word, Word>, Scalar>;

void add_triple(Triple& t, const Field& f, const std::tuple<Word, Word, Word>& k, Scalar c) {
  auto& s = t[k];
  s = f.add(s, c);
  if (!s.v) t.erase(k);
}

// (psi x id) psi and (id x psi) psi, both as maps into triples
Triple psi_left(const Tensor& t) {
  const Field& f = *t.field;
  Triple out;
  auto s = coproduct(t);
  for (const auto& b : s.blocks)
    for (const auto& [k, c] : b) {
      auto s2 = coproduct(Tensor::word(t.field, t.m, k.first));
      for (const auto& b2 : s2.blocks)
        for (const auto& [k2, c2] : b2) add_triple(out, f, {k2.first, k2.second, k.second}, f.mul(c, c2));
    }
  return out;
}

Triple psi_right(const Tensor& t) {
  const Field& f = *t.field;
  Triple out;
  auto s = coproduct(t);
  for (const auto& b : s.blocks)
    for (const auto& [k, c] : b) {
      auto s2 = coproduct(Tensor::word(t.field, t.m, k.second));
      for (const auto& b2 : s2.blocks)
        for (const auto& [k2, c2] : b2) add_triple(out, f, {k.first, k2.first, k2.second}, f.mul(c, c2));
    }
  return out;
}

std::vector<Word> all_words(int m, int n) {
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < ipow(m, n); ++i) out.push_back(index_word(i, m, n));
  return out;
}

}  // namespace

TEST_CASE("concat basics") {
  auto f = field_ptr(2, 1);
  Tensor x1 = Tensor::word(f, 2, {1}), x2 = Tensor::word(f, 2, {2});
  CHECK(concat(x1, x2) == Tensor::word(f, 2, {1, 2}));
  Tensor s = concat(x1 + x2, x1);
  CHECK(s == Tensor::word(f, 2, {1, 1}) + Tensor::word(f, 2, {2, 1}));
  CHECK(concat(Tensor::unit(f, 2), s) == s);
  CHECK_THROWS_AS(concat(x1, Tensor::word(f, 3, {1})), Error);
  CHECK_THROWS_AS(concat(x1, Tensor::word(field_ptr(3, 1), 2, {1})), Error);
}

TEST_CASE("coproduct on small words") {
  auto f = field_ptr(3, 1);
  auto s = coproduct(Tensor::word(f, 2, {1}));
  CHECK(s.blocks[0].size() == 1);
  CHECK(s.blocks[0].at({Word{}, Word{1}}) == Scalar{1});
  CHECK(s.blocks[1].at({Word{1}, Word{}}) == Scalar{1});
  auto s2 = coproduct(Tensor::word(f, 2, {1, 2}));
  CHECK(s2.blocks[2].at({Word{1, 2}, Word{}}) == Scalar{1});
  CHECK(s2.blocks[1].at({Word{1}, Word{2}}) == Scalar{1});
  CHECK(s2.blocks[1].at({Word{2}, Word{1}}) == Scalar{1});
  CHECK(s2.blocks[0].at({Word{}, Word{1, 2}}) == Scalar{1});
  CHECK(s2.blocks[1].size() == 2);
  auto s0 = coproduct(Tensor::unit(f, 2));
  CHECK(s0.blocks.size() == 1);
  CHECK(s0.blocks[0].at({Word{}, Word{}}) == Scalar{1});
}

TEST_CASE("coassociative and cocommutative") {
  for (int p : {2, 3}) {
    auto f = field_ptr(p, 1);
    for (int m = 1; m <= 3; ++m)
      for (int n = 0; n <= (m == 3 ? 4 : 6); ++n)
        for (const auto& w : all_words(m, n)) {
          Tensor t = Tensor::word(f, m, w);
          CHECK(psi_left(t) == psi_right(t));
          CHECK(swap(coproduct(t)) == coproduct(t));
        }
  }
}

TEST_CASE("coproduct is an algebra map") {
  auto f = field_ptr(3, 1);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (const auto& u : all_words(2, a))
        for (const auto& v : all_words(2, b)) {
          Tensor tu = Tensor::word(f, 2, u), tv = Tensor::word(f, 2, v);
          CHECK(coproduct(concat(tu, tv)) == multiply(coproduct(tu), coproduct(tv)));
        }
}

TEST_CASE("antipode") {
  auto f2 = field_ptr(2, 1);
  auto f3 = field_ptr(3, 1);
  CHECK(antipode(Tensor::word(f3, 2, {1})) == Tensor::word(f3, 2, {1}, f3->neg(f3->one())));
  CHECK(antipode(Tensor::word(f2, 2, {1, 2})) == Tensor::word(f2, 2, {2, 1}));
  CHECK(antipode(Tensor::unit(f3, 2)) == Tensor::unit(f3, 2));
  // chi * id = unit counit
  for (auto f : {f2, f3})
    for (int n = 0; n <= 6; ++n)
      for (const auto& w : all_words(2, n)) {
        Tensor t = Tensor::word(f, 2, w);
        Tensor r = mu_apply(coproduct(t), antipode, [](const Tensor& x) { return x; });
        if (n == 0)
          CHECK(r == Tensor::unit(f, 2));
        else
          CHECK(r.is_zero());
        Tensor r2 = mu_apply(coproduct(t), [](const Tensor& x) { return x; }, antipode);
        CHECK(r2 == r);
      }
}

TEST_CASE("lambda scaling") {
  auto f4 = field_ptr(2, 2);
  Scalar w = f4->primitive_root(3);
  Tensor t = Tensor::word(f4, 2, {1, 2, 1});
  CHECK(lambda(f4->one(), t) == t);
  CHECK(lambda(w, t) == t);
  CHECK(lambda(w, Tensor::word(f4, 2, {1})) == Tensor::word(f4, 2, {1}, w));
  CHECK(lambda(f4->zero(), t).is_zero());
}

TEST_CASE("group algebra action") {
  auto f = field_ptr(2, 1);
  Tensor t = Tensor::word(f, 2, {1, 2});
  CHECK(apply_group_algebra(GroupAlgebraElement::identity(f, 2), t) == t);
  auto tau = GroupAlgebraElement::basis(f, adjacent(2, 0));
  CHECK(apply_group_algebra(tau, t) == Tensor::word(f, 2, {2, 1}));
  CHECK(apply_group_algebra(GroupAlgebraElement::identity(f, 2) + tau, t) == t + Tensor::word(f, 2, {2, 1}));
  CHECK_THROWS_AS(apply_group_algebra(tau, Tensor::word(f, 2, {1})), Error);
  // left action: (s * t) . a = s . (t . a)
  auto f3 = field_ptr(3, 1);
  std::mt19937 rng(5);
  const auto& ps = all_perms(4);
  Tensor a = Tensor::word(f3, 4, {1, 2, 3, 4});
  for (int i = 0; i < 30; ++i) {
    const Perm& s = ps[rng() % 24];
    const Perm& u = ps[rng() % 24];
    auto gs = GroupAlgebraElement::basis(f3, s), gu = GroupAlgebraElement::basis(f3, u);
    CHECK(apply_group_algebra(gs * gu, a) == apply_group_algebra(gs, apply_group_algebra(gu, a)));
  }
}

TEST_CASE("reduced words multiply back") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : all_perms(n)) {
      Perm r = identity_perm(n);
      for (int i : reduced_word(s)) r = star(r, adjacent(n, i));
      CHECK(r == s);
    }
}

TEST_CASE("dense round trip") {
  auto f = field_ptr(3, 1);
  Tensor t = Tensor::word(f, 3, {3, 1, 2}) + Tensor::word(f, 3, {1, 1, 1}, {2});
  CHECK(from_dense(f, 3, 3, to_dense(t)) == t);
  CHECK(word_index({1, 1, 2}, 2) == 1);
}

TEST_CASE("primitive examples") {
  auto f2 = field_ptr(2, 1);
  CHECK(primitives(1, 3, f2).dim() == 3);
  Subspace p1 = primitives(2, 1, f2);
  CHECK(p1.dim() == 1);
  CHECK(p1.contains(*f2, to_dense(Tensor::word(f2, 1, {1, 1}))));
  Subspace p2 = primitives(2, 2, f2);
  CHECK(p2.dim() == 3);
  CHECK(p2.contains(*f2, to_dense(Tensor::word(f2, 2, {1, 1}))));
  CHECK(p2.contains(*f2, to_dense(Tensor::word(f2, 2, {2, 2}))));
  CHECK(p2.contains(*f2, to_dense(Tensor::word(f2, 2, {1, 2}) + Tensor::word(f2, 2, {2, 1}))));
  auto f3 = field_ptr(3, 1);
  CHECK(primitives(2, 2, f3).dim() == 1);
}

TEST_CASE("primitives are killed by the reduced coproduct") {
  auto f = field_ptr(2, 1);
  Subspace P = primitives(4, 2, f);
  for (std::size_t i = 0; i < P.dim(); ++i) {
    Tensor t = from_dense(f, 2, 4, P.basis().row_vec(i));
    auto s = coproduct(t);
    for (int d = 1; d < 4; ++d) CHECK(s.blocks[d].empty());
  }
}
