#include "liesplit/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace liesplit {

void Matrix::append_row(const std::vector<Scalar>& v) {
  if (rows == 0 && cols == 0) cols = v.size();
  if (v.size() != cols) throw std::invalid_argument("row length mismatch");
  data.insert(data.end(), v.begin(), v.end());
  ++rows;
}

void Matrix::append_rows(const Matrix& m) {
  if (m.rows == 0) return;
  if (rows == 0 && cols == 0) cols = m.cols;
  if (m.cols != cols) throw std::invalid_argument("row length mismatch");
  data.insert(data.end(), m.data.begin(), m.data.end());
  rows += m.rows;
}

Matrix identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = {1};
  return m;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      Scalar s = a(i, k);
      if (s.v) f.axpy(c.row(i), s, b.row(k), b.cols);
    }
  return c;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix c = a;
  f.axpy(c.data.data(), f.one(), b.data.data(), c.data.size());
  return c;
}

Matrix subtract(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shape mismatch");
  Matrix c = a;
  f.axpy(c.data.data(), f.neg(f.one()), b.data.data(), c.data.size());
  return c;
}

Matrix scaled(const Field& f, const Matrix& a, Scalar c) {
  Matrix r = a;
  f.scale(r.data.data(), c, r.data.size());
  return r;
}

std::vector<Scalar> row_times(const Field& f, const std::vector<Scalar>& x, const Matrix& a) {
  std::vector<Scalar> y(a.cols);
  for (std::size_t k = 0; k < a.rows; ++k)
    if (x[k].v) f.axpy(y.data(), x[k], a.row(k), a.cols);
  return y;
}

Matrix from_rows(std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

bool is_zero(const Matrix& a) {
  for (Scalar s : a.data)
    if (s.v) return false;
  return true;
}

namespace {

std::vector<std::size_t> rref_gf2(Matrix& a) {
  std::size_t words = (a.cols + 63) / 64;
  std::vector<std::uint64_t> bits(a.rows * words, 0);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (a(i, j).v) bits[i * words + j / 64] |= std::uint64_t(1) << (j % 64);
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t w = c / 64;
    std::uint64_t mask = std::uint64_t(1) << (c % 64);
    std::size_t i = r;
    while (i < a.rows && !(bits[i * words + w] & mask)) ++i;
    if (i == a.rows) continue;
    if (i != r)
      for (std::size_t k = 0; k < words; ++k) std::swap(bits[i * words + k], bits[r * words + k]);
    const std::uint64_t* pr = &bits[r * words];
    for (std::size_t j = 0; j < a.rows; ++j) {
      if (j == r || !(bits[j * words + w] & mask)) continue;
      std::uint64_t* pj = &bits[j * words];
      for (std::size_t k = w; k < words; ++k) pj[k] ^= pr[k];
    }
    piv.push_back(c);
    ++r;
  }
  Matrix out(r, a.cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (bits[i * words + j / 64] >> (j % 64) & 1) out(i, j) = {1};
  a = std::move(out);
  return piv;
}

}  // namespace

std::vector<std::size_t> rref(const Field& f, Matrix& a) {
  if (f.is_gf2() && a.rows > 8) return rref_gf2(a);
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t i = r;
    while (i < a.rows && a(i, c).v == 0) ++i;
    if (i == a.rows) continue;
    if (i != r)
      for (std::size_t k = 0; k < a.cols; ++k) std::swap(a(i, k), a(r, k));
    Scalar inv = f.inv(a(r, c));
    if (inv != f.one()) f.scale(a.row(r) + c, inv, a.cols - c);
    for (std::size_t j = 0; j < a.rows; ++j) {
      if (j == r) continue;
      Scalar s = a(j, c);
      if (s.v) f.axpy(a.row(j) + c, f.neg(s), a.row(r) + c, a.cols - c);
    }
    piv.push_back(c);
    ++r;
  }
  a.rows = r;
  a.data.resize(r * a.cols);
  return piv;
}

std::size_t rank(const Field& f, Matrix a) { return rref(f, a).size(); }

Matrix right_kernel(const Field& f, const Matrix& a) {
  Matrix r = a;
  auto piv = rref(f, r);
  std::vector<char> is_piv(a.cols, 0);
  for (auto c : piv) is_piv[c] = 1;
  Matrix k(0, a.cols);
  for (std::size_t j = 0; j < a.cols; ++j) {
    if (is_piv[j]) continue;
    std::vector<Scalar> v(a.cols);
    v[j] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r(i, j));
    k.append_row(v);
  }
  return k;
}

Matrix left_kernel(const Field& f, const Matrix& a) { return right_kernel(f, transpose(a)); }

Matrix inverse(const Field& f, const Matrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = a.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = f.one();
  }
  auto piv = rref(f, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool invertible(const Field& f, const Matrix& a) { return a.rows == a.cols && rank(f, a) == a.rows; }

std::optional<std::vector<Scalar>> solve_affine(const Field& f, const Matrix& a, const std::vector<Scalar>& b) {
  Matrix aug(a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  auto piv = rref(f, aug);
  if (!piv.empty() && piv.back() == a.cols) return std::nullopt;
  std::vector<Scalar> x(a.cols);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols);
  return x;
}

std::optional<Matrix> express_rows(const Field& f, const Matrix& b, const Matrix& y) {
  if (b.rows == 0) {
    if (!is_zero(y)) return std::nullopt;
    return Matrix(y.rows, 0);
  }
  Matrix r = b;
  auto piv = rref(f, r);
  if (piv.size() != b.rows) throw std::invalid_argument("express_rows: dependent basis");
  Matrix bp(b.rows, b.rows), yp(y.rows, b.rows);
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < piv.size(); ++j) bp(i, j) = b(i, piv[j]);
  for (std::size_t i = 0; i < y.rows; ++i)
    for (std::size_t j = 0; j < piv.size(); ++j) yp(i, j) = y(i, piv[j]);
  Matrix c = multiply(f, yp, inverse(f, bp));
  if (!(multiply(f, c, b) == y)) return std::nullopt;
  return c;
}

Subspace Subspace::span(const Field& f, Matrix rows) {
  Subspace s;
  s.pivots_ = rref(f, rows);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<std::vector<Scalar>>& rows) {
  return span(f, from_rows(ambient, rows));
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s;
  s.basis_ = identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

std::vector<Scalar> Subspace::reduce(const Field& f, std::vector<Scalar> v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = v[pivots_[i]];
    if (c.v) f.axpy(v.data(), f.neg(c), basis_.row(i), basis_.cols);
  }
  return v;
}

bool Subspace::contains(const Field& f, const std::vector<Scalar>& v) const {
  for (Scalar s : reduce(f, v))
    if (s.v) return false;
  return true;
}

bool Subspace::contains(const Field& f, const Subspace& w) const {
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (!contains(f, w.basis().row_vec(i))) return false;
  return true;
}

std::vector<Scalar> Subspace::coordinates(const Field& f, const std::vector<Scalar>& v) const {
  if (!contains(f, v)) throw std::invalid_argument("vector not in subspace");
  std::vector<Scalar> c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace sum(const Field& f, const Subspace& a, const Subspace& b) {
  Matrix m = a.basis();
  if (m.rows == 0) m = Matrix(0, b.ambient());
  m.append_rows(b.basis());
  return Subspace::span(f, std::move(m));
}

Subspace intersect(const Field& f, const Subspace& a, const Subspace& b) {
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient());
  Matrix m = a.basis();
  m.append_rows(b.basis());
  Matrix k = left_kernel(f, m);
  Matrix out(0, a.ambient());
  for (std::size_t i = 0; i < k.rows; ++i) {
    std::vector<Scalar> x(k.row(i), k.row(i) + a.dim());
    out.append_row(row_times(f, x, a.basis()));
  }
  return Subspace::span(f, std::move(out));
}

Subspace complement(const Field& f, const Subspace& u, const Subspace& w) {
  Matrix m(0, u.ambient());
  for (std::size_t i = 0; i < u.dim(); ++i) m.append_row(w.reduce(f, u.basis().row_vec(i)));
  return Subspace::span(f, std::move(m));
}

Subspace image(const Field& f, const Subspace& s, const Matrix& a) {
  if (s.dim() == 0) return Subspace(a.cols);
  return Subspace::span(f, multiply(f, s.basis(), a));
}

std::vector<Scalar> IncrementalBasis::reduce(const Field& f, std::vector<Scalar> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = v[pivots_[r]];
    if (c.v) f.axpy(v.data(), f.neg(c), rows_[r].data(), ambient_);
  }
  return v;
}

bool IncrementalBasis::contains(const Field& f, std::vector<Scalar> v) const {
  v = reduce(f, std::move(v));
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return !s.v; });
}

bool IncrementalBasis::add(const Field& f, std::vector<Scalar> v) {
  v = reduce(f, std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && !v[p].v) ++p;
  if (p == ambient_) return false;
  f.scale(v.data(), f.inv(v[p]), ambient_);
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

Subspace IncrementalBasis::subspace(const Field& f) const { return Subspace::span(f, ambient_, rows_); }

void SpanBuilder::add(const Field& f, const std::vector<Scalar>& v) {
  pending_.append_row(v);
  if (pending_.rows >= std::max<std::size_t>(ambient_, 256)) flush(f);
}

void SpanBuilder::flush(const Field& f) {
  if (pending_.rows == 0) return;
  Matrix all = span_.basis();
  if (all.rows == 0) all = Matrix(0, ambient_);
  all.append_rows(pending_);
  span_ = Subspace::span(f, std::move(all));
  pending_ = Matrix(0, ambient_);
}

Subspace SpanBuilder::finish(const Field& f) {
  flush(f);
  return span_;
}

}  // namespace liesplit
