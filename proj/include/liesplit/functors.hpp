#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liesplit/lie.hpp"

namespace liesplit {

// one Subspace of T_q(V) per degree q = 0..cap
using Graded = std::vector<Subspace>;

enum class FunctorKind { Tn, Ln, Lres, Closure, Bracket, TensorProd, Compose, Sum, SubHopf };

struct FunctorSpec {
  FunctorKind kind = FunctorKind::Tn;
  int n = 0;                 // Tn, Ln, Lres; k of L_k for Compose
  std::vector<int> gens;     // SubHopf generating degrees
  std::optional<Tensor> seed;
  std::vector<std::shared_ptr<const FunctorSpec>> children;

  static FunctorSpec leaf(FunctorKind k, int n);
  static FunctorSpec node(FunctorKind k, FunctorSpec a, FunctorSpec b);
};

// T(3) L(3) Lres(4) B{3,6,12} L2oL(3) [F,G] F*G F+G C(x1x2-x2x1)
FunctorSpec parse_functor(const std::string& text, FieldPtr f);
std::string to_string(const FunctorSpec& spec);
// -1 for graded specs
int degree(const FunctorSpec& spec);

// concatenation and commutator on dense word coordinates
std::vector<Scalar> concat_dense(const Field& f, const std::vector<Scalar>& a, const std::vector<Scalar>& b);
std::vector<Scalar> bracket_dense(const Field& f, const std::vector<Scalar>& a, const std::vector<Scalar>& b);
// T_n of x_j -> sum_i a(j, i) y_i on dense coordinates
std::vector<Scalar> apply_dense(const Field& f, const Matrix& a, int n, const std::vector<Scalar>& v);
// D x D matrix of T_n(a) acting on row vectors, a square
Matrix tensor_power_matrix(const Field& f, const Matrix& a, int n);

// transvections x_i -> x_i + c x_j (c over the power basis), scaling one
// coordinate by the field generator, single-coordinate annihilations
std::vector<Matrix> monoid_generators(int m, const Field& f);

Graded evaluate(const FunctorSpec& spec, int m, FieldPtr f, int cap);

// L_k(U) for U inside T_d(V): Lyndon brackets of length k on a basis of U
Subspace lie_power_of(const Field& f, const Subspace& U, int k, int m, int d);

Subspace gl_closure(const Tensor& seed, int m);
// smallest subspace containing s and stable under T_n(g) for the monoid generators
Subspace close_under_monoid(const Field& f, Subspace s, int m, int n);

Graded subhopf_evaluate(const std::vector<int>& gens, int cap, int m, FieldPtr f);

struct Indecomposables {
  std::size_t dim = 0;
  Subspace decomposable;
  Subspace complement;
};
Indecomposables q_n_indecomposables(const Graded& B, int q, int m, const Field& f);

struct TnProjectiveCheck {
  bool holds = false;
  bool retraction = false;
  bool lifting = false;
  std::optional<Matrix> retraction_map;  // D x dim M, coordinates in M's basis
  std::optional<Matrix> lifting_map;     // dim M x D
};
TnProjectiveCheck functorial_tn_projective_check(const Subspace& M, int n, int m, FieldPtr f);

// images: row i is the image of row i of A's basis, inside T_nb(V)
bool equivariant_iso_check(const Subspace& A, int na, const Subspace& B, int nb, const Matrix& images, int m,
                           const Field& f);

}  // namespace liesplit
