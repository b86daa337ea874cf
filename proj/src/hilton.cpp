#include "liesplit/hilton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "liesplit/error.hpp"
#include "liesplit/functors.hpp"

namespace liesplit {

std::vector<BasicProduct> basic_products(const std::vector<int>& degrees, int d_cap) {
  for (std::size_t i = 1; i < degrees.size(); ++i)
    if (degrees[i] < degrees[i - 1]) throw Error(ErrorKind::IndexOutOfRange, "letter degrees must be non-decreasing");
  int k = int(degrees.size());
  std::vector<BasicProduct> all;
  std::vector<std::vector<int>> by_weight(1);
  for (int i = 0; i < k; ++i) {
    if (degrees[i] < 1) throw Error(ErrorKind::DegreeOutOfRange, "letter degrees must be positive");
    if (degrees[i] > d_cap) continue;
    BasicProduct b;
    b.letter = i + 1;
    b.d = degrees[i];
    b.flat = {i + 1};
    b.letter_counts.assign(k, 0);
    b.letter_counts[i] = 1;
    b.expr = "x" + std::to_string(i + 1);
    b.serial = int(all.size()) + 1;
    all.push_back(b);
  }
  by_weight.emplace_back();
  for (std::size_t i = 0; i < all.size(); ++i) by_weight[1].push_back(int(i));
  int min_deg = degrees.empty() ? 1 : degrees[0];
  for (int n = 2; n * min_deg <= d_cap; ++n) {
    std::vector<BasicProduct> fresh;
    for (int a = 1; a < n; ++a)
      for (int i1 : by_weight[n - a])
        for (int i2 : by_weight[a]) {
          const auto& w1 = all[i1];
          const auto& w2 = all[i2];
          if (!(w2.serial < w1.serial)) continue;
          // r(w1) <= s(w2): the right factor of w1 is not above w2
          if (w1.right >= 0 && all[w1.right].serial > w2.serial) continue;
          if (w1.d + w2.d > d_cap) continue;
          BasicProduct b;
          b.left = i1;
          b.right = i2;
          b.weight = n;
          b.rank = w2.serial;
          b.d = w1.d + w2.d;
          b.flat = w1.flat;
          b.flat.insert(b.flat.end(), w2.flat.begin(), w2.flat.end());
          b.letter_counts = w1.letter_counts;
          for (int i = 0; i < k; ++i) b.letter_counts[i] += w2.letter_counts[i];
          b.expr = "[" + w1.expr + "," + w2.expr + "]";
          fresh.push_back(std::move(b));
        }
    if (fresh.empty() && by_weight[n - 1].empty()) break;
    std::sort(fresh.begin(), fresh.end(), [&](const BasicProduct& x, const BasicProduct& y) {
      if (x.flat != y.flat) return x.flat < y.flat;
      return all[x.left].serial < all[y.left].serial;
    });
    by_weight.emplace_back();
    for (auto& b : fresh) {
      b.serial = int(all.size()) + 1;
      by_weight[n].push_back(int(all.size()));
      all.push_back(std::move(b));
    }
  }
  return all;
}

std::int64_t mobius(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "mobius needs n >= 1");
  int mu = 1;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      mu = -mu;
    }
  return n > 1 ? -mu : mu;
}

std::int64_t multiplicity(const std::vector<int>& counts) {
  int l = 0, l0 = 0;
  for (int c : counts) {
    if (c < 0) throw Error(ErrorKind::IndexOutOfRange, "negative letter count");
    l += c;
    l0 = std::gcd(l0, c);
  }
  if (l == 0) return 0;
  if (l > 30) throw Error(ErrorKind::Overflow, "multiplicity limited to weight 30");
  auto multinomial = [&](int d) {
    // (l/d)! / prod (l_i/d)! as a running product of binomials
    __int128 r = 1;
    int acc = 0;
    for (int c : counts) {
      int t = c / d;
      for (int j = 1; j <= t; ++j) r = r * (acc + j) / j;
      acc += t;
    }
    return r;
  };
  __int128 s = 0;
  for (int d = 1; d <= l0; ++d)
    if (l0 % d == 0) s += mobius(d) * multinomial(d);
  return std::int64_t(s / l);
}

std::vector<std::int64_t> hilbert_series_d_dims(const std::vector<std::int64_t>& b, int cap) {
  if (b.empty() || b[0] != 1) throw Error(ErrorKind::DimensionMismatch, "B_0 must be 1");
  if (int(b.size()) <= cap) throw Error(ErrorKind::CapExceeded, "B dims shorter than the cap");
  std::vector<std::int64_t> d(cap + 1, 0);
  for (int q = 1; q <= cap; ++q) {
    std::int64_t v = b[q];
    for (int n = 1; n < q; ++n) v -= d[n] * b[q - n];
    if (v < 0)
      throw Error(ErrorKind::NegativeGeneratorDim, "negative generator dimension in degree " + std::to_string(q));
    d[q] = v;
  }
  return d;
}

std::vector<std::int64_t> hilbert_series_b_dims(const std::vector<std::int64_t>& d, int cap) {
  std::vector<std::int64_t> b(cap + 1, 0);
  b[0] = 1;
  for (int q = 1; q <= cap; ++q)
    for (int n = 1; n <= q && n < int(d.size()); ++n) b[q] += d[n] * b[q - n];
  return b;
}

std::vector<int> generated_degrees(int p, const std::vector<int>& M, const std::vector<int>& f, int cap) {
  if (f.size() != M.size() && f.size() != 1 && !M.empty())
    throw Error(ErrorKind::DimensionMismatch, "need one p-power bound per element or a single bound");
  std::vector<int> out;
  for (std::size_t i = 0; i < M.size(); ++i) {
    int m = M[i];
    if (m <= 1 || std::gcd(m, p) != 1) throw Error(ErrorKind::HypothesisViolated, std::to_string(m) + " is not > 1 and prime to p");
    int bound = f.size() == 1 ? f[0] : f[i];
    long v = m;
    for (int r = 0; (bound < 0 || r < bound) && v <= cap; ++r, v *= p) out.push_back(int(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> all_coprime(int p, int cap) {
  std::vector<int> out;
  for (int n = 2; n <= cap; ++n) {
    int t = n;
    while (t % p == 0) t /= p;
    if (t > 1) out.push_back(n);
  }
  return out;
}

Theorem61Report verify_theorem61(const std::vector<int>& letter_degrees, int target, int vdim, int p,
                                 HiltonMode mode) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, "p must be prime");
  Theorem61Report rep;
  rep.p = p;
  rep.target = target;
  rep.vdim = vdim;
  std::vector<int> degs;
  for (int n : letter_degrees)
    if (n <= target) degs.push_back(n);
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  if (std::find(degs.begin(), degs.end(), target) == degs.end())
    throw Error(ErrorKind::HypothesisViolated, "target is not a generating degree");

  auto products = basic_products(degs, target);
  auto term_dim = [&](const BasicProduct& w, const std::vector<std::int64_t>& dims) -> std::int64_t {
    std::int64_t base = 1;
    for (std::size_t i = 0; i < degs.size(); ++i)
      for (int c = 0; c < w.letter_counts[i]; ++c) base *= dims[i];
    return base == 0 ? 0 : witt_dim(target / w.d, base);
  };

  // generator dims from the identity itself, degree by degree
  std::vector<std::int64_t> rec(degs.size(), 0);
  for (std::size_t i = 0; i < degs.size(); ++i) {
    int n = degs[i];
    std::int64_t rest = 0;
    for (const auto& w : products) {
      if (n % w.d != 0 || (w.letter == int(i) + 1)) continue;
      bool uses_later = false;
      for (std::size_t j = i; j < degs.size(); ++j) uses_later |= w.letter_counts[j] > 0;
      if (uses_later) continue;
      std::int64_t base = 1;
      for (std::size_t j = 0; j < i; ++j)
        for (int c = 0; c < w.letter_counts[j]; ++c) base *= rec[j];
      if (base) rest += witt_dim(n / w.d, base);
    }
    rec[i] = witt_dim(n, vdim) - rest;
  }

  // generator dims from the algebra they generate, when it fits
  std::vector<std::int64_t> dims = rec;
  bool algebra = ipow(vdim, target) <= (std::uint64_t(1) << 16);
  Graded B;
  FieldPtr f = field_ptr(p, 1);
  if (algebra) {
    B = subhopf_evaluate(degs, target, vdim, f);
    std::vector<std::int64_t> bd;
    for (const auto& s : B) bd.push_back(std::int64_t(s.dim()));
    auto d = hilbert_series_d_dims(bd, target);
    for (std::size_t i = 0; i < degs.size(); ++i) dims[i] = d[degs[i]];
    for (int q = 1; q <= target; ++q)
      if (d[q] != 0 && std::find(degs.begin(), degs.end(), q) == degs.end())
        rep.flags.push_back("nonzero generator dimension in degree " + std::to_string(q));
  }
  for (std::size_t i = 0; i < degs.size(); ++i) {
    rep.letters.push_back({degs[i], dims[i], rec[i], algebra});
    if (dims[i] != rec[i])
      rep.flags.push_back("degree " + std::to_string(degs[i]) + ": algebra gives " + std::to_string(dims[i]) +
                          ", identity gives " + std::to_string(rec[i]));
  }

  std::map<std::vector<int>, std::int64_t> per_multiset;
  for (const auto& w : products) {
    if (target % w.d != 0) continue;
    Theorem61Term t{w.expr, w.weight, w.d, target / w.d, term_dim(w, dims), w.letter_counts};
    per_multiset[w.letter_counts] += 1;
    rep.sum += t.dim;
    rep.terms.push_back(std::move(t));
  }
  rep.lie_dim = witt_dim(target, vdim);
  rep.dims_hold = rep.lie_dim == rep.sum;
  rep.multiplicities_hold = true;
  for (const auto& [counts, n] : per_multiset) rep.multiplicities_hold &= multiplicity(counts) == n;

  if (mode == HiltonMode::Explicit) {
    if (vdim != 2 || target > 12) throw Error(ErrorKind::CapExceeded, "explicit mode needs vdim 2 and target <= 12");
    rep.explicit_mode = true;
    const Field& F = *f;
    // D_n: canonical complement of the decomposable Lie elements inside L_n
    std::vector<Subspace> D;
    for (int n : degs) {
      auto Q = q_n_indecomposables(B, n, vdim, F);
      Subspace L = lyndon_basis(n, vdim, f);
      D.push_back(complement(F, L, intersect(F, L, Q.decomposable)));
    }
    for (std::size_t i = 0; i < degs.size(); ++i)
      if (std::int64_t(D[i].dim()) != dims[i])
        rep.flags.push_back("explicit D_" + std::to_string(degs[i]) + " has dim " + std::to_string(D[i].dim()));
    // w(D) bracketed along the product tree
    std::vector<std::optional<Subspace>> wd(products.size());
    std::function<const Subspace&(int)> image = [&](int i) -> const Subspace& {
      if (wd[i]) return *wd[i];
      const auto& w = products[i];
      if (w.letter > 0) {
        wd[i] = D[w.letter - 1];
      } else {
        const Subspace& a = image(w.left);
        const Subspace& b = image(w.right);
        SpanBuilder sb(ipow(vdim, w.d));
        for (std::size_t x = 0; x < a.dim(); ++x)
          for (std::size_t y = 0; y < b.dim(); ++y)
            sb.add(F, bracket_dense(F, a.basis().row_vec(x), b.basis().row_vec(y)));
        wd[i] = sb.finish(F);
      }
      return *wd[i];
    };
    Matrix all(0, ipow(vdim, target));
    std::size_t total = 0;
    for (std::size_t i = 0; i < products.size(); ++i) {
      const auto& w = products[i];
      if (target % w.d != 0) continue;
      Subspace piece = lie_power_of(F, image(int(i)), target / w.d, vdim, w.d);
      rep.explicit_dims.push_back(piece.dim());
      total += piece.dim();
      all.append_rows(piece.basis());
    }
    Subspace S = Subspace::span(F, all);
    rep.direct_sum = S.dim() == total && S == lyndon_basis(target, vdim, f);
    for (std::size_t i = 0; i < rep.terms.size(); ++i)
      if (std::int64_t(rep.explicit_dims[i]) != rep.terms[i].dim) rep.direct_sum = false;
  }
  rep.holds = rep.dims_hold && rep.multiplicities_hold && rep.flags.empty() && (!rep.explicit_mode || rep.direct_sum);
  return rep;
}

}  // namespace liesplit
