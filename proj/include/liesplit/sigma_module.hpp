#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liesplit/group_algebra.hpp"
#include "liesplit/linalg.hpp"

namespace liesplit {

enum class Side { Left, Right };

// Embedding of a module into T_k(V_n), V_n with basis x_1..x_n. When
// multilinear (k == n) coordinates are permutation ranks: rank(s) stands for
// the word x_{s(1)}...x_{s(n)}. Otherwise coordinates are dense word indices.
struct Ambient {
  int degree = 0;
  bool multilinear = true;
  Matrix basis;  // one row per module basis vector
};

// Finite dimensional k(Sigma_n)-module given by the matrices of the adjacent
// transpositions s_1..s_{n-1}. Vectors are rows on both sides: for a right
// module x.s = x A_s, for a left module s.x = x A_s.
struct SigmaModule {
  FieldPtr field;
  int n = 0;
  std::size_t dim = 0;
  Side side = Side::Right;
  std::vector<Matrix> actions;
  std::optional<Ambient> ambient;
};

SigmaModule regular_module(FieldPtr f, int n, Side side = Side::Right);
SigmaModule trivial_module(FieldPtr f, int n, Side side = Side::Right);
SigmaModule sign_module(FieldPtr f, int n, Side side = Side::Right);
// V^{tensor n} with dim V = m, positions permuted (left module)
SigmaModule tensor_power_module(FieldPtr f, int n, int m);

// involutions plus braid relations
bool check_module(const SigmaModule& M);
// matrix of the permutation s acting on row vectors
Matrix action_matrix(const SigmaModule& M, const Perm& s);

// right module spanned by the given rows of an ambient; rows must be
// independent and the span stable under letter relabelling
SigmaModule module_from_ambient(FieldPtr f, int n, Ambient amb);
// submodule with the given basis rows in M coordinates
SigmaModule submodule(const SigmaModule& M, const Matrix& basis);
// quotient U / W for submodules W in U (rows in M coordinates)
SigmaModule quotient_module(const SigmaModule& M, const Subspace& U, const Subspace& W);

// T_k(V_n) -> T_k(V_{n-1}) induced by d_i (1-based), row convention
Matrix face_map(int i, int n, int k, const Field& f);
// letter relabelling by s_i on T_k(V_n) word coordinates
Matrix relabel_map(int i, int n, int k);

SigmaModule gamma(FieldPtr f, const Subspace& B_n, const Subspace& B_n1, int n, int k);

struct TensorOverGroup {
  std::size_t dim = 0;
  Subspace relations;
  // dM*dW x dim; row a*dW + b is the class of m_a (x) w_b
  Matrix quotient_map;
};
TensorOverGroup tensor_over_group(const SigmaModule& M, const SigmaModule& W);
// dim of M (x) V^{tensor n}, by Young coinvariants per letter content
std::size_t tensor_with_tensor_power_dim(const SigmaModule& M, int m);

struct PhiResult {
  std::size_t source_dim = 0;
  Subspace image;
};
PhiResult phi_map(const SigmaModule& M, int m);

std::size_t tor1_dim(const SigmaModule& M, const SigmaModule& W);
std::size_t tor1_dim_tensor_power(const SigmaModule& M, int m);

std::vector<Perm> sylow_generators(int n, int p);
std::vector<Perm> generated_group(const std::vector<Perm>& gens, int n);

struct ProjectivityResult {
  bool projective = false;
  bool cover_verdict = false;
  bool norm_verdict = false;
  std::size_t sylow_order = 1;
  std::size_t norm_rank = 0;
  std::size_t cover_generators = 0;
  Matrix section;  // inverse of the free cover when it is an isomorphism
  std::string certificate;
};
ProjectivityResult is_projective(const SigmaModule& M);

SigmaModule dual_module(const SigmaModule& M);

// basis of Hom(M, N); X represents x -> x X
std::vector<Matrix> hom_space(const SigmaModule& M, const SigmaModule& N);
std::size_t hom_dim(const SigmaModule& M, const SigmaModule& N);
std::optional<Matrix> find_isomorphism(const SigmaModule& M, const SigmaModule& N, std::uint64_t seed,
                                       int budget = 64);
bool is_equivariant(const SigmaModule& M, const SigmaModule& N, const Matrix& X);

struct FittingSplit {
  Matrix image_basis, kernel_basis;  // rows in M coordinates
  SigmaModule image, kernel;
  int k = 1;
};
FittingSplit fitting_split(const SigmaModule& M, const Matrix& theta);

struct Summand {
  SigmaModule module;
  Matrix basis;  // rows in coordinates of the decomposed module
  bool certified = false;
};
struct Decomposition {
  std::vector<Summand> summands;
  bool complete = true;  // false when some factor was left after the trial budget
  std::size_t trials = 0;
};
Decomposition indecomposable_decomposition(const SigmaModule& M, std::uint64_t seed, int budget = 64);

struct ProjectiveSplit {
  Summand projective;
  Summand complement;
  Decomposition decomposition;
};
ProjectiveSplit max_projective_summand(const SigmaModule& M, std::uint64_t seed = 1, int budget = 64);

}  // namespace liesplit
