#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "liesplit/field.hpp"
#include "liesplit/group_algebra.hpp"
#include "liesplit/linalg.hpp"

namespace liesplit {

// letters are generator indices 1..m
using Word = std::vector<std::uint8_t>;

struct Tensor {
  FieldPtr field;
  int m = 0;
  int n = 0;
  std::map<Word, Scalar> terms;  // no zero coefficients

  Tensor() = default;
  Tensor(FieldPtr f, int gens, int deg) : field(std::move(f)), m(gens), n(deg) {}
  static Tensor unit(FieldPtr f, int gens);
  static Tensor word(FieldPtr f, int gens, const Word& w, Scalar c = {1});

  void add_term(const Word& w, Scalar c);
  Scalar coeff(const Word& w) const;
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.m == b.m && a.n == b.n && a.terms == b.terms;
  }
};

Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor scale(Scalar c, const Tensor& a);

Tensor concat(const Tensor& t, const Tensor& u);
Tensor antipode(const Tensor& t);
Tensor lambda(Scalar zeta, const Tensor& t);
Scalar counit(const Tensor& t);
Tensor apply_group_algebra(const GroupAlgebraElement& g, const Tensor& t);
// T_n of the linear map x_j -> sum_i a(j, i) y_i (a is m_in x m_out)
Tensor apply_linear_map(const Matrix& a, int m_out, const Tensor& t);

// psi(t) split by left degree: blocks[i] holds the (i, n-i) part
struct TensorPairSum {
  FieldPtr field;
  int m = 0;
  int n = 0;
  std::vector<std::map<std::pair<Word, Word>, Scalar>> blocks;

  friend bool operator==(const TensorPairSum& a, const TensorPairSum& b) {
    return a.n == b.n && a.blocks == b.blocks;
  }
};

TensorPairSum coproduct(const Tensor& t);
TensorPairSum swap(const TensorPairSum& s);
// (a x b)(c x d) = ac x bd
TensorPairSum multiply(const TensorPairSum& a, const TensorPairSum& b);
// mu (f x g) applied to a pair sum, f and g act on homogeneous tensors
Tensor mu_apply(const TensorPairSum& s, const std::function<Tensor(const Tensor&)>& f,
                const std::function<Tensor(const Tensor&)>& g);

// dense coordinates, word index is big-endian base m in letters-1
std::uint64_t word_index(const Word& w, int m);
Word index_word(std::uint64_t idx, int m, int n);
std::uint64_t ipow(std::uint64_t b, int k);
std::vector<Scalar> to_dense(const Tensor& t);
Tensor from_dense(FieldPtr f, int m, int n, const std::vector<Scalar>& v);

constexpr std::uint64_t kDenseLimit = std::uint64_t(1) << 20;

// kernel of the reduced coproduct in T_n(V), V of dimension m
Subspace primitives(int n, int m, FieldPtr field);

}  // namespace liesplit
