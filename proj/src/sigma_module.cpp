#include "liesplit/sigma_module.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "liesplit/error.hpp"
#include "liesplit/tensor.hpp"

namespace liesplit {

namespace {

Matrix perm_rows(std::size_t d, const std::vector<std::size_t>& target) {
  Matrix a(d, d);
  for (std::size_t i = 0; i < d; ++i) a(i, target[i]) = {1};
  return a;
}

Matrix solve_in_basis(const Field& f, const Matrix& B, const Matrix& Y) {
  auto A = express_rows(f, B, Y);
  if (!A) throw Error(ErrorKind::NotStable, "span is not stable under the action");
  return *A;
}

std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (parts > 0) rec(0, n);
  return out;
}

// blocks[i] = block of position/value i for a content vector
std::vector<int> block_of(const std::vector<int>& content) {
  std::vector<int> b;
  for (std::size_t j = 0; j < content.size(); ++j)
    for (int r = 0; r < content[j]; ++r) b.push_back(int(j));
  return b;
}

void check_side(const SigmaModule& M, Side s, const char* what) {
  if (M.side != s) throw Error(ErrorKind::IndexMismatch, what);
}

}  // namespace

SigmaModule regular_module(FieldPtr f, int n, Side side) {
  const auto& ps = all_perms(n);
  SigmaModule M{f, n, ps.size(), side, {}, std::nullopt};
  for (int i = 0; i + 1 < n; ++i) {
    Perm s = adjacent(n, i);
    std::vector<std::size_t> tgt(ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k)
      tgt[k] = perm_rank(side == Side::Right ? star(ps[k], s) : star(s, ps[k]));
    M.actions.push_back(perm_rows(ps.size(), tgt));
  }
  if (side == Side::Right) M.ambient = Ambient{n, true, identity(ps.size())};
  return M;
}

SigmaModule trivial_module(FieldPtr f, int n, Side side) {
  SigmaModule M{f, n, 1, side, {}, std::nullopt};
  for (int i = 0; i + 1 < n; ++i) M.actions.push_back(identity(1));
  return M;
}

SigmaModule sign_module(FieldPtr f, int n, Side side) {
  SigmaModule M{f, n, 1, side, {}, std::nullopt};
  for (int i = 0; i + 1 < n; ++i) {
    Matrix a(1, 1);
    a(0, 0) = f->neg(f->one());
    M.actions.push_back(a);
  }
  return M;
}

SigmaModule tensor_power_module(FieldPtr f, int n, int m) {
  std::uint64_t D = ipow(m, n);
  if (D > 4096) throw Error(ErrorKind::DimensionTooLarge, "tensor power module too large");
  SigmaModule W{f, n, D, Side::Left, {}, std::nullopt};
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> tgt(D);
    for (std::uint64_t w = 0; w < D; ++w) {
      Word x = index_word(w, m, n);
      std::swap(x[i], x[i + 1]);
      tgt[w] = word_index(x, m);
    }
    W.actions.push_back(perm_rows(D, tgt));
  }
  return W;
}

bool check_module(const SigmaModule& M) {
  const Field& f = *M.field;
  if (int(M.actions.size()) != std::max(M.n - 1, 0)) return false;
  Matrix I = identity(M.dim);
  for (std::size_t i = 0; i < M.actions.size(); ++i) {
    const Matrix& a = M.actions[i];
    if (a.rows != M.dim || a.cols != M.dim) return false;
    if (!(multiply(f, a, a) == I)) return false;
    for (std::size_t j = i + 1; j < M.actions.size(); ++j) {
      const Matrix& b = M.actions[j];
      if (j == i + 1) {
        if (!(multiply(f, multiply(f, a, b), a) == multiply(f, multiply(f, b, a), b))) return false;
      } else if (!(multiply(f, a, b) == multiply(f, b, a))) {
        return false;
      }
    }
  }
  return true;
}

Matrix action_matrix(const SigmaModule& M, const Perm& s) {
  auto w = reduced_word(s);
  if (M.side == Side::Left) std::reverse(w.begin(), w.end());
  Matrix r = identity(M.dim);
  for (int i : w) r = multiply(*M.field, r, M.actions[i]);
  return r;
}

Matrix relabel_map(int i, int n, int k) {
  std::uint64_t D = ipow(n, k);
  std::vector<std::size_t> tgt(D);
  for (std::uint64_t w = 0; w < D; ++w) {
    Word x = index_word(w, n, k);
    for (auto& l : x) {
      if (l == i + 1)
        l = std::uint8_t(i + 2);
      else if (l == i + 2)
        l = std::uint8_t(i + 1);
    }
    tgt[w] = word_index(x, n);
  }
  return perm_rows(D, tgt);
}

SigmaModule module_from_ambient(FieldPtr f, int n, Ambient amb) {
  SigmaModule M{f, n, amb.basis.rows, Side::Right, {}, std::nullopt};
  if (amb.multilinear && amb.degree != n) throw Error(ErrorKind::DegreeMismatch, "multilinear ambient needs k = n");
  const auto& ps = amb.multilinear ? all_perms(n) : all_perms(0);
  for (int i = 0; i + 1 < n; ++i) {
    Matrix Y(amb.basis.rows, amb.basis.cols);
    if (amb.multilinear) {
      Perm s = adjacent(n, i);
      for (std::size_t k = 0; k < ps.size(); ++k) {
        std::size_t t = perm_rank(star(ps[k], s));
        for (std::size_t r = 0; r < amb.basis.rows; ++r) Y(r, t) = amb.basis(r, k);
      }
    } else {
      Y = multiply(*f, amb.basis, relabel_map(i, n, amb.degree));
    }
    M.actions.push_back(M.dim ? solve_in_basis(*f, amb.basis, Y) : Matrix(0, 0));
  }
  M.ambient = std::move(amb);
  return M;
}

SigmaModule submodule(const SigmaModule& M, const Matrix& basis) {
  const Field& f = *M.field;
  SigmaModule S{M.field, M.n, basis.rows, M.side, {}, std::nullopt};
  for (const auto& a : M.actions)
    S.actions.push_back(basis.rows ? solve_in_basis(f, basis, multiply(f, basis, a)) : Matrix(0, 0));
  if (M.ambient && basis.rows) {
    Ambient amb = *M.ambient;
    amb.basis = multiply(f, basis, M.ambient->basis);
    S.ambient = std::move(amb);
  }
  return S;
}

SigmaModule quotient_module(const SigmaModule& M, const Subspace& U, const Subspace& W) {
  const Field& f = *M.field;
  Subspace C = complement(f, U, W);
  SigmaModule Q{M.field, M.n, C.dim(), M.side, {}, std::nullopt};
  for (const auto& a : M.actions) {
    Matrix A(C.dim(), C.dim());
    for (std::size_t r = 0; r < C.dim(); ++r) {
      auto y = W.reduce(f, row_times(f, C.basis().row_vec(r), a));
      auto c = C.coordinates(f, y);
      for (std::size_t j = 0; j < c.size(); ++j) A(r, j) = c[j];
    }
    Q.actions.push_back(A);
  }
  return Q;
}

Matrix face_map(int i, int n, int k, const Field& f) {
  if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "face index");
  std::uint64_t D = ipow(n, k), D1 = ipow(n - 1, k);
  Matrix a(D, D1);
  for (std::uint64_t w = 0; w < D; ++w) {
    Word x = index_word(w, n, k);
    bool dead = false;
    for (auto& l : x) {
      if (l == i) dead = true;
      if (l > i) --l;
    }
    if (!dead) a(w, word_index(x, n - 1)) = f.one();
  }
  return a;
}

SigmaModule gamma(FieldPtr f, const Subspace& B_n, const Subspace& B_n1, int n, int k) {
  const Field& F = *f;
  std::uint64_t D = ipow(n, k);
  if (B_n.ambient() != D) throw Error(ErrorKind::DimensionMismatch, "B(V_n) ambient");
  Matrix stacked(B_n.dim(), 0);
  std::vector<Matrix> imgs;
  for (int i = 1; i <= n; ++i) {
    Matrix d = face_map(i, n, k, F);
    Matrix img = B_n.dim() ? multiply(F, B_n.basis(), d) : Matrix(0, d.cols);
    for (std::size_t r = 0; r < img.rows; ++r)
      if (!B_n1.contains(F, img.row_vec(r))) throw Error(ErrorKind::NotStable, "B(d_i) leaves the target subspace");
    imgs.push_back(std::move(img));
  }
  std::size_t total = 0;
  for (const auto& m : imgs) total += m.cols;
  Matrix big(B_n.dim(), total);
  std::size_t off = 0;
  for (const auto& m : imgs) {
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) big(r, off + c) = m(r, c);
    off += m.cols;
  }
  Matrix K = left_kernel(F, big);
  Subspace G = Subspace::span(F, K.rows ? multiply(F, K, B_n.basis()) : Matrix(0, D));
  Ambient amb{k, k == n, {}};
  if (k == n) {
    const auto& ps = all_perms(n);
    amb.basis = Matrix(G.dim(), ps.size());
    for (std::size_t r = 0; r < G.dim(); ++r)
      for (std::size_t j = 0; j < ps.size(); ++j) {
        Word w(n);
        for (int t = 0; t < n; ++t) w[t] = std::uint8_t(ps[j][t] + 1);
        amb.basis(r, j) = G.basis()(r, word_index(w, n));
      }
  } else {
    amb.basis = G.basis();
  }
  return module_from_ambient(f, n, std::move(amb));
}

TensorOverGroup tensor_over_group(const SigmaModule& M, const SigmaModule& W) {
  check_side(M, Side::Right, "first factor must be a right module");
  check_side(W, Side::Left, "second factor must be a left module");
  if (M.n != W.n) throw Error(ErrorKind::IndexMismatch, "symmetric group degrees differ");
  const Field& f = *M.field;
  std::size_t dM = M.dim, dW = W.dim, D = dM * dW;
  if (D > 6000) throw Error(ErrorKind::DimensionTooLarge, "tensor product too large");
  Subspace rel(D);
  Matrix chunk(0, D);
  Scalar minus1 = f.neg(f.one());
  auto flush = [&] {
    if (chunk.rows == 0) return;
    Matrix all = rel.basis();
    if (all.rows == 0) all = Matrix(0, D);
    all.append_rows(chunk);
    rel = Subspace::span(f, std::move(all));
    chunk = Matrix(0, D);
  };
  for (std::size_t s = 0; s < M.actions.size(); ++s) {
    const Matrix& A = M.actions[s];
    const Matrix& B = W.actions[s];
    for (std::size_t a = 0; a < dM; ++a)
      for (std::size_t b = 0; b < dW; ++b) {
        std::vector<Scalar> r(D);
        for (std::size_t a2 = 0; a2 < dM; ++a2)
          if (A(a, a2).v) r[a2 * dW + b] = f.add(r[a2 * dW + b], A(a, a2));
        for (std::size_t b2 = 0; b2 < dW; ++b2)
          if (B(b, b2).v) r[a * dW + b2] = f.add(r[a * dW + b2], f.mul(minus1, B(b, b2)));
        chunk.append_row(r);
        if (chunk.rows >= std::max<std::size_t>(D, 64)) flush();
      }
  }
  flush();
  TensorOverGroup out;
  out.dim = D - rel.dim();
  std::vector<std::size_t> col(D, SIZE_MAX), row_of(D, SIZE_MAX);
  std::size_t q = 0;
  for (std::size_t i = 0; i < rel.pivots().size(); ++i) row_of[rel.pivots()[i]] = i;
  for (std::size_t j = 0; j < D; ++j)
    if (row_of[j] == SIZE_MAX) col[j] = q++;
  out.quotient_map = Matrix(D, out.dim);
  for (std::size_t j = 0; j < D; ++j) {
    if (col[j] != SIZE_MAX) {
      out.quotient_map(j, col[j]) = f.one();
      continue;
    }
    const Scalar* r = rel.basis().row(row_of[j]);
    for (std::size_t c = 0; c < D; ++c)
      if (col[c] != SIZE_MAX && r[c].v) out.quotient_map(j, col[c]) = f.neg(r[c]);
  }
  out.relations = std::move(rel);
  return out;
}

std::size_t tensor_with_tensor_power_dim(const SigmaModule& M, int m) {
  check_side(M, Side::Right, "module must be a right module");
  const Field& f = *M.field;
  std::size_t total = 0;
  for (const auto& content : compositions(M.n, m)) {
    auto blk = block_of(content);
    Matrix rel(0, M.dim);
    for (int i = 0; i + 1 < M.n; ++i)
      if (blk[i] == blk[i + 1]) rel.append_rows(subtract(f, M.actions[i], identity(M.dim)));
    total += M.dim - (rel.rows ? rank(f, rel) : 0);
  }
  return total;
}

std::size_t tor1_dim_tensor_power(const SigmaModule& M, int m) {
  check_side(M, Side::Right, "module must be a right module");
  if (!M.ambient || !M.ambient->multilinear) throw Error(ErrorKind::NoAmbient, "needs an embedding into gamma_n");
  const Field& f = *M.field;
  const auto& ps = all_perms(M.n);
  std::size_t total = 0;
  for (const auto& content : compositions(M.n, m)) {
    auto blk = block_of(content);
    Matrix rel(0, M.dim);
    for (int i = 0; i + 1 < M.n; ++i)
      if (blk[i] == blk[i + 1]) rel.append_rows(subtract(f, M.actions[i], identity(M.dim)));
    std::size_t coinv = M.dim - (rel.rows ? rank(f, rel) : 0);
    // right cosets of the Young subgroup: values relabelled within blocks
    std::map<std::vector<int>, std::size_t> cls;
    std::vector<std::size_t> cls_of(ps.size());
    for (std::size_t j = 0; j < ps.size(); ++j) {
      std::vector<int> key(M.n);
      for (int t = 0; t < M.n; ++t) key[t] = blk[ps[j][t]];
      cls_of[j] = cls.emplace(key, cls.size()).first->second;
    }
    Matrix img(M.dim, cls.size());
    for (std::size_t r = 0; r < M.dim; ++r)
      for (std::size_t j = 0; j < ps.size(); ++j) {
        Scalar c = M.ambient->basis(r, j);
        if (c.v) img(r, cls_of[j]) = f.add(img(r, cls_of[j]), c);
      }
    total += coinv - rank(f, img);
  }
  return total;
}

std::size_t tor1_dim(const SigmaModule& M, const SigmaModule& W) {
  check_side(M, Side::Right, "first factor must be a right module");
  if (!M.ambient || !M.ambient->multilinear) throw Error(ErrorKind::NoAmbient, "needs an embedding into gamma_n");
  if (M.n > 5) throw Error(ErrorKind::DimensionTooLarge, "general Tor needs n <= 5");
  const Field& f = *M.field;
  auto T = tensor_over_group(M, W);
  const auto& ps = all_perms(M.n);
  std::vector<Matrix> rho;
  for (const auto& s : ps) rho.push_back(action_matrix(W, s));
  Matrix phi(M.dim * W.dim, W.dim);
  for (std::size_t a = 0; a < M.dim; ++a) {
    Matrix acc(W.dim, W.dim);
    for (std::size_t j = 0; j < ps.size(); ++j) {
      Scalar c = M.ambient->basis(a, j);
      if (c.v) f.axpy(acc.data.data(), c, rho[j].data.data(), acc.data.size());
    }
    for (std::size_t b = 0; b < W.dim; ++b)
      for (std::size_t c = 0; c < W.dim; ++c) phi(a * W.dim + b, c) = acc(b, c);
  }
  return T.dim - rank(f, phi);
}

PhiResult phi_map(const SigmaModule& M, int m) {
  if (!M.ambient) throw Error(ErrorKind::NoAmbient, "phi needs an ambient embedding");
  const Field& f = *M.field;
  const Ambient& amb = *M.ambient;
  int n = M.n, k = amb.degree;
  std::uint64_t out_dim = ipow(m, k);
  if (out_dim > kDenseLimit) throw Error(ErrorKind::DimensionTooLarge, "T_k(V) too large");
  // letter sequences of the ambient coordinates
  std::vector<Word> coord_words;
  if (amb.multilinear) {
    for (const auto& s : all_perms(n)) {
      Word w(n);
      for (int t = 0; t < n; ++t) w[t] = std::uint8_t(s[t] + 1);
      coord_words.push_back(w);
    }
  } else {
    for (std::uint64_t i = 0; i < amb.basis.cols; ++i) coord_words.push_back(index_word(i, n, k));
  }
  Matrix rows(0, out_dim);
  for (std::uint64_t a = 0; a < ipow(m, n); ++a) {
    Word sub = index_word(a, m, n);
    for (std::size_t r = 0; r < M.dim; ++r) {
      std::vector<Scalar> v(out_dim);
      for (std::size_t j = 0; j < coord_words.size(); ++j) {
        Scalar c = amb.basis(r, j);
        if (!c.v) continue;
        Word w(k);
        for (int t = 0; t < k; ++t) w[t] = sub[coord_words[j][t] - 1];
        std::uint64_t idx = word_index(w, m);
        v[idx] = f.add(v[idx], c);
      }
      rows.append_row(v);
    }
    if (rows.rows > 4 * out_dim) {
      Subspace s = Subspace::span(f, std::move(rows));
      rows = s.basis();
      if (rows.rows == 0) rows = Matrix(0, out_dim);
    }
  }
  PhiResult res;
  res.image = Subspace::span(f, std::move(rows));
  res.source_dim = amb.multilinear ? tensor_with_tensor_power_dim(M, m) : 0;
  return res;
}

std::vector<Perm> sylow_generators(int n, int p) {
  std::vector<Perm> gens;
  std::function<void(int, int)> block = [&](int off, int size) {
    if (size == 1) return;
    int sub = size / p;
    block(off, sub);
    Perm c = identity_perm(n);
    for (int i = 0; i < size; ++i) c[off + i] = std::uint8_t(off + (i + sub) % size);
    gens.push_back(c);
  };
  int off = 0, rest = n;
  std::vector<int> digits;
  while (rest) {
    digits.push_back(rest % p);
    rest /= p;
  }
  for (int k = int(digits.size()) - 1; k >= 0; --k) {
    int size = 1;
    for (int t = 0; t < k; ++t) size *= p;
    for (int r = 0; r < digits[k]; ++r) {
      block(off, size);
      off += size;
    }
  }
  return gens;
}

std::vector<Perm> generated_group(const std::vector<Perm>& gens, int n) {
  std::vector<Perm> out{identity_perm(n)};
  std::map<Perm, int> seen{{out[0], 0}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Perm h = star(out[i], g);
      if (seen.emplace(h, 0).second) out.push_back(h);
    }
  return out;
}

ProjectivityResult is_projective(const SigmaModule& M) {
  if (M.dim > 1000 || M.n > 7) throw Error(ErrorKind::DimensionTooLarge, "projectivity check limited to dim 1000, n 7");
  const Field& f = *M.field;
  ProjectivityResult res;
  auto gens = sylow_generators(M.n, f.p());
  std::vector<Matrix> gmat;
  for (const auto& g : gens) gmat.push_back(action_matrix(M, g));
  // all elements of the Sylow subgroup with their matrices
  std::vector<Perm> elems{identity_perm(M.n)};
  std::vector<Matrix> mats{identity(M.dim)};
  std::map<Perm, int> seen{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Perm h = star(elems[i], gens[g]);
      if (!seen.emplace(h, 0).second) continue;
      elems.push_back(h);
      mats.push_back(M.side == Side::Right ? multiply(f, mats[i], gmat[g]) : multiply(f, gmat[g], mats[i]));
    }
  std::size_t P = elems.size();
  res.sylow_order = P;
  if (M.dim == 0) {
    res.projective = res.cover_verdict = res.norm_verdict = true;
    res.certificate = "zero module";
    return res;
  }
  // (b) norm element rank
  Matrix N(M.dim, M.dim);
  for (const auto& m : mats) f.axpy(N.data.data(), f.one(), m.data.data(), N.data.size());
  res.norm_rank = rank(f, N);
  res.norm_verdict = M.dim % P == 0 && res.norm_rank * P == M.dim;
  // (a) minimal free cover over the Sylow subgroup
  Matrix rad(0, M.dim);
  for (std::size_t i = 1; i < mats.size(); ++i) rad.append_rows(subtract(f, mats[i], identity(M.dim)));
  Subspace R = rad.rows ? Subspace::span(f, rad) : Subspace(M.dim);
  Subspace G = complement(f, Subspace::whole(M.dim), R);
  res.cover_generators = G.dim();
  Matrix cover(0, M.dim);
  for (std::size_t j = 0; j < G.dim(); ++j)
    for (const auto& m : mats) cover.append_row(row_times(f, G.basis().row_vec(j), m));
  res.cover_verdict = cover.rows == M.dim && invertible(f, cover);
  if (res.cover_verdict) res.section = inverse(f, cover);
  res.projective = res.norm_verdict;
  res.certificate = "sylow order " + std::to_string(P) + ", norm rank " + std::to_string(res.norm_rank) +
                    ", free cover on " + std::to_string(G.dim()) + " generators " +
                    (res.cover_verdict ? "splits" : "does not split");
  return res;
}

SigmaModule dual_module(const SigmaModule& M) {
  SigmaModule D{M.field, M.n, M.dim, M.side == Side::Right ? Side::Left : Side::Right, {}, std::nullopt};
  for (const auto& a : M.actions) D.actions.push_back(transpose(inverse(*M.field, a)));
  return D;
}

bool is_equivariant(const SigmaModule& M, const SigmaModule& N, const Matrix& X) {
  const Field& f = *M.field;
  for (std::size_t s = 0; s < M.actions.size(); ++s)
    if (!(multiply(f, M.actions[s], X) == multiply(f, X, N.actions[s]))) return false;
  return true;
}

std::vector<Matrix> hom_space(const SigmaModule& M, const SigmaModule& N) {
  if (M.n != N.n) throw Error(ErrorKind::IndexMismatch, "symmetric group degrees differ");
  if (M.side != N.side) throw Error(ErrorKind::IndexMismatch, "module sides differ");
  if (!(M.field->params() == N.field->params())) throw Error(ErrorKind::FieldMismatch, "fields differ");
  const Field& f = *M.field;
  std::size_t dM = M.dim, dN = N.dim;
  if (dM == 0 || dN == 0) return {};
  std::size_t ns = M.actions.size();

  // spin M from as few generators as possible, recording relations
  struct Def {
    int gen = -1;
    std::size_t parent = 0;
    std::size_t s = 0;
  };
  struct Rel {
    std::size_t j, s;
    std::vector<Scalar> lambda;
  };
  std::vector<std::vector<Scalar>> stdv, ech, coef;
  std::vector<std::size_t> piv;
  std::vector<Def> defs;
  std::vector<Rel> rels;
  int t = 0;
  auto reduce = [&](std::vector<Scalar> u, std::vector<Scalar>& lam) {
    lam.assign(dM, Scalar{0});
    for (std::size_t r = 0; r < ech.size(); ++r) {
      Scalar c = u[piv[r]];
      if (!c.v) continue;
      f.axpy(u.data(), f.neg(c), ech[r].data(), dM);
      f.axpy(lam.data(), c, coef[r].data(), dM);
    }
    return u;
  };
  auto add_std = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& rem, const std::vector<Scalar>& lam,
                     Def d) {
    std::size_t j = stdv.size();
    stdv.push_back(u);
    defs.push_back(d);
    std::size_t pc = 0;
    while (!rem[pc].v) ++pc;
    Scalar inv = f.inv(rem[pc]);
    std::vector<Scalar> row = rem, cf(dM);
    f.scale(row.data(), inv, dM);
    cf[j] = f.one();
    f.axpy(cf.data(), f.neg(f.one()), lam.data(), dM);
    f.scale(cf.data(), inv, dM);
    ech.push_back(row);
    coef.push_back(cf);
    piv.push_back(pc);
  };
  std::size_t cand = 0, processed = 0;
  std::vector<Scalar> lam;
  while (stdv.size() < dM) {
    for (;; ++cand) {
      std::vector<Scalar> e(dM);
      e[cand] = f.one();
      auto rem = reduce(e, lam);
      bool zero = std::all_of(rem.begin(), rem.end(), [](Scalar s) { return !s.v; });
      if (!zero) {
        add_std(e, rem, lam, Def{t++, 0, 0});
        ++cand;
        break;
      }
    }
    for (; processed < stdv.size(); ++processed)
      for (std::size_t s = 0; s < ns; ++s) {
        auto u = row_times(f, stdv[processed], M.actions[s]);
        auto rem = reduce(u, lam);
        bool zero = std::all_of(rem.begin(), rem.end(), [](Scalar x) { return !x.v; });
        if (zero)
          rels.push_back({processed, s, lam});
        else
          add_std(u, rem, lam, Def{-1, processed, s});
      }
  }

  // images of the spun basis as linear functions of the generator images
  std::size_t U = std::size_t(t) * dN;
  std::vector<Matrix> F(dM);
  for (std::size_t j = 0; j < dM; ++j) {
    if (defs[j].gen >= 0) {
      F[j] = Matrix(U, dN);
      for (std::size_t c = 0; c < dN; ++c) F[j](defs[j].gen * dN + c, c) = f.one();
    } else {
      F[j] = multiply(f, F[defs[j].parent], N.actions[defs[j].s]);
    }
  }
  Matrix K = identity(U);
  for (const auto& r : rels) {
    Matrix R = multiply(f, F[r.j], N.actions[r.s]);
    for (std::size_t k = 0; k < dM; ++k)
      if (r.lambda[k].v) f.axpy(R.data.data(), f.neg(r.lambda[k]), F[k].data.data(), R.data.size());
    Matrix KR = multiply(f, K, R);
    if (is_zero(KR)) continue;
    Matrix L = left_kernel(f, KR);
    K = L.rows ? multiply(f, L, K) : Matrix(0, U);
    if (K.rows == 0) break;
  }
  Matrix S(0, dM);
  for (const auto& v : stdv) S.append_row(v);
  Matrix Sinv = inverse(f, S);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < K.rows; ++i) {
    std::vector<Scalar> u = K.row_vec(i);
    Matrix Xs(dM, dN);
    for (std::size_t j = 0; j < dM; ++j) {
      auto y = row_times(f, u, F[j]);
      std::copy(y.begin(), y.end(), Xs.row(j));
    }
    out.push_back(multiply(f, Sinv, Xs));
  }
  return out;
}

std::size_t hom_dim(const SigmaModule& M, const SigmaModule& N) { return hom_space(M, N).size(); }

std::optional<Matrix> find_isomorphism(const SigmaModule& M, const SigmaModule& N, std::uint64_t seed, int budget) {
  if (M.dim != N.dim) return std::nullopt;
  const Field& f = *M.field;
  auto H = hom_space(M, N);
  if (M.dim == 0) return Matrix(0, 0);
  if (H.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < budget; ++trial) {
    Matrix X(M.dim, N.dim);
    for (const auto& h : H) f.axpy(X.data.data(), {std::uint32_t(rng() % f.size())}, h.data.data(), X.data.size());
    if (invertible(f, X)) return X;
  }
  return std::nullopt;
}

FittingSplit fitting_split(const SigmaModule& M, const Matrix& theta) {
  const Field& f = *M.field;
  SigmaModule same = M;
  if (!is_equivariant(M, same, theta)) throw Error(ErrorKind::NotEquivariant, "endomorphism does not commute");
  Matrix P = theta;
  std::size_t r = rank(f, P);
  int k = 1;
  for (;;) {
    Matrix P2 = multiply(f, P, theta);
    std::size_t r2 = rank(f, P2);
    if (r2 == r) break;
    P = std::move(P2);
    r = r2;
    ++k;
  }
  FittingSplit out;
  out.k = k;
  out.image_basis = Subspace::span(f, P).basis();
  if (out.image_basis.rows == 0) out.image_basis = Matrix(0, M.dim);
  out.kernel_basis = left_kernel(f, P);
  if (out.kernel_basis.rows == 0) out.kernel_basis = Matrix(0, M.dim);
  out.image = submodule(M, out.image_basis);
  out.kernel = submodule(M, out.kernel_basis);
  return out;
}

Decomposition indecomposable_decomposition(const SigmaModule& M, std::uint64_t seed, int budget) {
  const Field& f = *M.field;
  std::mt19937_64 rng(seed);
  Decomposition out;
  std::deque<Summand> work;
  work.push_back({M, identity(M.dim), false});
  while (!work.empty()) {
    Summand X = std::move(work.front());
    work.pop_front();
    if (X.module.dim <= 1) {
      X.certified = true;
      if (X.module.dim) out.summands.push_back(std::move(X));
      continue;
    }
    auto H = hom_space(X.module, X.module);
    if (H.size() <= 1) {
      X.certified = true;
      out.summands.push_back(std::move(X));
      continue;
    }
    std::optional<FittingSplit> split;
    double space = 1;
    for (std::size_t i = 0; i < H.size(); ++i) space *= double(f.size());
    if (space <= 4096) {
      // exhaustive search for a nontrivial idempotent
      std::vector<std::uint32_t> c(H.size(), 0);
      bool found = false;
      for (std::uint64_t code = 0; code < std::uint64_t(space) && !found; ++code) {
        std::uint64_t v = code;
        Matrix E(X.module.dim, X.module.dim);
        for (std::size_t i = 0; i < H.size(); ++i) {
          Scalar s{std::uint32_t(v % f.size())};
          v /= f.size();
          if (s.v) f.axpy(E.data.data(), s, H[i].data.data(), E.data.size());
        }
        if (!(multiply(f, E, E) == E) || is_zero(E) || E == identity(X.module.dim)) continue;
        split = fitting_split(X.module, E);
        found = true;
      }
      X.certified = !found;
    } else {
      for (int trial = 0; trial < budget && !split; ++trial) {
        ++out.trials;
        Matrix phi(X.module.dim, X.module.dim);
        for (const auto& h : H)
          f.axpy(phi.data.data(), {std::uint32_t(rng() % f.size())}, h.data.data(), phi.data.size());
        auto fs = fitting_split(X.module, phi);
        if (fs.image.dim > 0 && fs.kernel.dim > 0) split = std::move(fs);
      }
      if (!split) out.complete = false;
    }
    if (!split) {
      out.summands.push_back(std::move(X));
      continue;
    }
    work.push_back({split->image, multiply(f, split->image_basis, X.basis), false});
    work.push_back({split->kernel, multiply(f, split->kernel_basis, X.basis), false});
  }
  return out;
}

ProjectiveSplit max_projective_summand(const SigmaModule& M, std::uint64_t seed, int budget) {
  ProjectiveSplit out;
  out.decomposition = indecomposable_decomposition(M, seed, budget);
  Matrix P(0, M.dim), C(0, M.dim);
  for (const auto& s : out.decomposition.summands) (is_projective(s.module).projective ? P : C).append_rows(s.basis);
  out.projective = {submodule(M, P), P, out.decomposition.complete};
  out.complement = {submodule(M, C), C, out.decomposition.complete};
  return out;
}

}  // namespace liesplit
