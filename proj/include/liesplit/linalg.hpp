#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liesplit/field.hpp"

namespace liesplit {

// Dense row-major matrix over a finite field. Vectors are rows.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Scalar& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  Scalar* row(std::size_t i) { return data.data() + i * cols; }
  const Scalar* row(std::size_t i) const { return data.data() + i * cols; }
  std::vector<Scalar> row_vec(std::size_t i) const { return {row(i), row(i) + cols}; }
  void append_row(const std::vector<Scalar>& v);
  void append_rows(const Matrix& m);

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity(std::size_t n);
Matrix transpose(const Matrix& a);
Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix subtract(const Field& f, const Matrix& a, const Matrix& b);
Matrix scaled(const Field& f, const Matrix& a, Scalar c);
std::vector<Scalar> row_times(const Field& f, const std::vector<Scalar>& x, const Matrix& a);
Matrix from_rows(std::size_t cols, const std::vector<std::vector<Scalar>>& rows);
bool is_zero(const Matrix& a);

// In place reduced row echelon form; zero rows are dropped. Returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& a);
std::size_t rank(const Field& f, Matrix a);
// Basis (rows) of {x : x a = 0}
Matrix left_kernel(const Field& f, const Matrix& a);
// Basis (rows) of {x : a x^T = 0}
Matrix right_kernel(const Field& f, const Matrix& a);
// Inverse of a square matrix; throws if singular.
Matrix inverse(const Field& f, const Matrix& a);
bool invertible(const Field& f, const Matrix& a);
// x with a x = b (a is equations x unknowns), free variables set to zero
std::optional<std::vector<Scalar>> solve_affine(const Field& f, const Matrix& a, const std::vector<Scalar>& b);
// C with C b = y for b of full row rank; nullopt when some row of y is outside the row space
std::optional<Matrix> express_rows(const Field& f, const Matrix& b, const Matrix& y);

// Subspace of F^dim held as a canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : basis_(0, ambient) {}
  static Subspace span(const Field& f, Matrix rows);
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<std::vector<Scalar>>& rows);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return basis_.cols; }
  std::size_t dim() const { return basis_.rows; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection along pivots
  std::vector<Scalar> reduce(const Field& f, std::vector<Scalar> v) const;
  bool contains(const Field& f, const std::vector<Scalar>& v) const;
  bool contains(const Field& f, const Subspace& w) const;
  // coordinates of a member vector in the RREF basis
  std::vector<Scalar> coordinates(const Field& f, const std::vector<Scalar>& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Field& f, const Subspace& a, const Subspace& b);
Subspace intersect(const Field& f, const Subspace& a, const Subspace& b);
// canonical complement of w inside u: reduce u modulo w, then RREF
Subspace complement(const Field& f, const Subspace& u, const Subspace& w);
// image of rows of s under x -> x a
Subspace image(const Field& f, const Subspace& s, const Matrix& a);

// Row space grown one vector at a time; add() reports whether the span grew.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t ambient) : ambient_(ambient) {}
  bool add(const Field& f, std::vector<Scalar> v);
  bool contains(const Field& f, std::vector<Scalar> v) const;
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Scalar>& row(std::size_t i) const { return rows_[i]; }
  Subspace subspace(const Field& f) const;

 private:
  std::vector<Scalar> reduce(const Field& f, std::vector<Scalar> v) const;
  std::size_t ambient_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

// Collects many spanning vectors and reduces them in batches.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient) : ambient_(ambient), pending_(0, ambient), span_(ambient) {}
  void add(const Field& f, const std::vector<Scalar>& v);
  Subspace finish(const Field& f);

 private:
  void flush(const Field& f);
  std::size_t ambient_;
  Matrix pending_;
  Subspace span_;
};

}  // namespace liesplit
