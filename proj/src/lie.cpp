#include "liesplit/lie.hpp"

#include <algorithm>
#include <map>

#include "liesplit/error.hpp"

namespace liesplit {

Tensor bracket(const Tensor& t, const Tensor& u) { return concat(t, u) - concat(u, t); }

Tensor left_normed(const Tensor& t) {
  Tensor out(t.field, t.m, t.n);
  if (t.n == 0) return t;
  for (const auto& [w, c] : t.terms) {
    Tensor cur = Tensor::word(t.field, t.m, Word{w[0]});
    for (int i = 1; i < t.n; ++i) cur = bracket(cur, Tensor::word(t.field, t.m, Word{w[i]}));
    out = out + scale(c, cur);
  }
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word rot(w.begin() + r, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + r);
    if (!(w < rot)) return false;
  }
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word right(w.begin() + i, w.end());
    if (is_lyndon(right)) return {Word(w.begin(), w.begin() + i), right};
  }
  return {w, {}};
}

std::vector<LyndonWord> lyndon_words(int n, int m) {
  std::vector<LyndonWord> out;
  if (n < 1 || m < 1) return out;
  // Duval's generation in lexicographic order, all lengths up to n
  Word w{1};
  while (!w.empty()) {
    if (int(w.size()) == n) out.push_back({w, standard_factorization(w)});
    std::size_t k = w.size();
    while (int(w.size()) < n) w.push_back(w[w.size() - k]);
    while (!w.empty() && w.back() == m) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

Tensor bracketed(const Word& lyndon, int m, FieldPtr f) {
  if (lyndon.size() == 1) return Tensor::word(f, m, lyndon);
  auto [l, r] = standard_factorization(lyndon);
  return bracket(bracketed(l, m, f), bracketed(r, m, f));
}

Subspace lyndon_basis(int n, int m, FieldPtr f) {
  if (n < 1) throw Error(ErrorKind::DegreeOutOfRange, "Lie powers need n >= 1");
  std::uint64_t D = ipow(m, n);
  if (D > kDenseLimit) throw Error(ErrorKind::DimensionTooLarge, "m^n exceeds dense limit");
  Matrix rows(0, D);
  for (const auto& w : lyndon_words(n, m)) rows.append_row(to_dense(bracketed(w.letters, m, f)));
  return Subspace::span(*f, std::move(rows));
}

std::int64_t witt_dim(int n, std::int64_t m) {
  if (n < 1) throw Error(ErrorKind::DegreeOutOfRange, "Witt formula needs n >= 1");
  auto mobius = [](int d) {
    int mu = 1;
    for (int q = 2; q * q <= d; ++q)
      if (d % q == 0) {
        d /= q;
        if (d % q == 0) return 0;
        mu = -mu;
      }
    return d > 1 ? -mu : mu;
  };
  auto power = [](__int128 b, int e) {
    __int128 r = 1;
    for (int i = 0; i < e; ++i) {
      r *= b;
      if (r > (__int128(1) << 100) || r < -(__int128(1) << 100)) throw Error(ErrorKind::Overflow, "m^n overflows");
    }
    return r;
  };
  __int128 s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += mobius(d) * power(m, n / d);
  s /= n;
  if (s > INT64_MAX || s < INT64_MIN) throw Error(ErrorKind::Overflow, "Witt dimension exceeds 64 bits");
  return std::int64_t(s);
}

LieModule lie_module(int n, FieldPtr f) {
  if (n < 1 || n > 7) throw Error(ErrorKind::DegreeOutOfRange, "Lie(n) needs 1 <= n <= 7");
  LieModule out;
  const auto& ps = all_perms(n);
  const auto& tails = all_perms(n - 1);
  Matrix amb(0, ps.size());
  Matrix dense(0, ipow(n, n));
  for (const auto& t : tails) {
    Word w{1};
    for (auto v : t) w.push_back(std::uint8_t(v + 2));
    Tensor b = left_normed(Tensor::word(f, n, w));
    std::vector<Scalar> row(ps.size());
    for (const auto& [word, c] : b.terms) {
      Perm s(n);
      for (int i = 0; i < n; ++i) s[i] = std::uint8_t(word[i] - 1);
      row[perm_rank(s)] = c;
    }
    amb.append_row(row);
    dense.append_row(to_dense(b));
    out.basis.push_back(std::move(b));
  }
  out.span = Subspace::span(*f, std::move(dense));
  out.module = module_from_ambient(f, n, Ambient{n, true, std::move(amb)});
  return out;
}

Subspace restricted_lie_power(int n, int m, FieldPtr f) {
  Subspace L = lyndon_basis(n, m, f);
  int p = int(f->p());
  if (n % p != 0) return L;
  Subspace below = restricted_lie_power(n / p, m, f);
  Matrix rows = L.basis();
  if (rows.rows == 0) rows = Matrix(0, L.ambient());
  for (std::size_t i = 0; i < below.dim(); ++i) {
    Tensor u = from_dense(f, m, n / p, below.basis().row_vec(i));
    Tensor pw = u;
    for (int k = 1; k < p; ++k) pw = concat(pw, u);
    rows.append_row(to_dense(pw));
  }
  return Subspace::span(*f, std::move(rows));
}

}  // namespace liesplit
