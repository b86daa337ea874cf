#include "liesplit/tensor.hpp"

#include <unordered_map>

#include "liesplit/error.hpp"

namespace liesplit {

namespace {

void check_compatible(const Tensor& a, const Tensor& b) {
  if (!(a.field->params() == b.field->params())) throw Error(ErrorKind::FieldMismatch, "tensor fields differ");
  if (a.m != b.m) throw Error(ErrorKind::GeneratorCountMismatch, "tensor generator counts differ");
}

void add_pair(std::map<std::pair<Word, Word>, Scalar>& block, const Field& f, std::pair<Word, Word> key, Scalar c) {
  if (!c.v) return;
  auto it = block.find(key);
  if (it == block.end()) {
    block.emplace(std::move(key), c);
    return;
  }
  it->second = f.add(it->second, c);
  if (!it->second.v) block.erase(it);
}

}  // namespace

Tensor Tensor::unit(FieldPtr f, int gens) {
  Tensor t(std::move(f), gens, 0);
  t.terms[Word{}] = {1};
  return t;
}

Tensor Tensor::word(FieldPtr f, int gens, const Word& w, Scalar c) {
  Tensor t(std::move(f), gens, int(w.size()));
  for (auto l : w)
    if (l < 1 || l > gens) throw Error(ErrorKind::IndexOutOfRange, "letter outside 1..m");
  t.add_term(w, c);
  return t;
}

void Tensor::add_term(const Word& w, Scalar c) {
  if (!c.v) return;
  if (int(w.size()) != n) throw Error(ErrorKind::DegreeMismatch, "word length differs from tensor degree");
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
    return;
  }
  it->second = field->add(it->second, c);
  if (!it->second.v) terms.erase(it);
}

Scalar Tensor::coeff(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Scalar{0} : it->second;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  check_compatible(a, b);
  if (a.n != b.n) throw Error(ErrorKind::DegreeMismatch, "adding tensors of different degree");
  Tensor r = a;
  for (const auto& [w, c] : b.terms) r.add_term(w, c);
  return r;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + scale(a.field->neg(a.field->one()), b); }

Tensor scale(Scalar c, const Tensor& a) {
  Tensor r(a.field, a.m, a.n);
  if (!c.v) return r;
  for (const auto& [w, x] : a.terms) r.terms.emplace(w, a.field->mul(c, x));
  return r;
}

Tensor concat(const Tensor& t, const Tensor& u) {
  check_compatible(t, u);
  const Field& f = *t.field;
  Tensor r(t.field, t.m, t.n + u.n);
  for (const auto& [w1, c1] : t.terms)
    for (const auto& [w2, c2] : u.terms) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, f.mul(c1, c2));
    }
  return r;
}

Tensor antipode(const Tensor& t) {
  const Field& f = *t.field;
  Scalar sign = t.n % 2 ? f.neg(f.one()) : f.one();
  Tensor r(t.field, t.m, t.n);
  for (const auto& [w, c] : t.terms) r.add_term(Word(w.rbegin(), w.rend()), f.mul(sign, c));
  return r;
}

Tensor lambda(Scalar zeta, const Tensor& t) { return scale(t.field->pow(zeta, std::uint64_t(t.n)), t); }

Scalar counit(const Tensor& t) { return t.n == 0 ? t.coeff(Word{}) : Scalar{0}; }

Tensor apply_group_algebra(const GroupAlgebraElement& g, const Tensor& t) {
  if (g.n != t.n) throw Error(ErrorKind::DegreeMismatch, "group element and tensor degrees differ");
  const Field& f = *t.field;
  const auto& ps = all_perms(g.n);
  Tensor r(t.field, t.m, t.n);
  Word out(t.n);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    Scalar gk = g.coeffs[k];
    if (!gk.v) continue;
    for (const auto& [w, c] : t.terms) {
      for (int i = 0; i < t.n; ++i) out[i] = w[ps[k][i]];
      r.add_term(out, f.mul(gk, c));
    }
  }
  return r;
}

Tensor apply_linear_map(const Matrix& a, int m_out, const Tensor& t) {
  const Field& f = *t.field;
  if (int(a.rows) != t.m || int(a.cols) != m_out) throw Error(ErrorKind::DimensionMismatch, "linear map shape");
  std::map<Word, Scalar> cur = t.terms;
  Tensor r(t.field, m_out, t.n);
  for (const auto& [w, c] : t.terms) {
    std::vector<std::pair<Word, Scalar>> partial{{Word{}, c}};
    for (auto l : w) {
      std::vector<std::pair<Word, Scalar>> next;
      for (const auto& [pw, pc] : partial)
        for (int j = 0; j < m_out; ++j) {
          Scalar s = a(l - 1, j);
          if (!s.v) continue;
          Word nw = pw;
          nw.push_back(std::uint8_t(j + 1));
          next.emplace_back(std::move(nw), f.mul(pc, s));
        }
      partial = std::move(next);
    }
    for (const auto& [pw, pc] : partial) r.add_term(pw, pc);
  }
  return r;
}

TensorPairSum coproduct(const Tensor& t) {
  const Field& f = *t.field;
  TensorPairSum s{t.field, t.m, t.n, {}};
  s.blocks.resize(t.n + 1);
  for (const auto& [w, c] : t.terms) {
    for (std::uint32_t mask = 0; mask < (1u << t.n); ++mask) {
      Word l, r;
      for (int i = 0; i < t.n; ++i) (mask >> i & 1 ? l : r).push_back(w[i]);
      int d = int(l.size());
      add_pair(s.blocks[d], f, {std::move(l), std::move(r)}, c);
    }
  }
  return s;
}

TensorPairSum swap(const TensorPairSum& s) {
  TensorPairSum r{s.field, s.m, s.n, {}};
  r.blocks.resize(s.n + 1);
  for (int i = 0; i <= s.n; ++i)
    for (const auto& [k, c] : s.blocks[i]) r.blocks[s.n - i].emplace(std::make_pair(k.second, k.first), c);
  return r;
}

TensorPairSum multiply(const TensorPairSum& a, const TensorPairSum& b) {
  const Field& f = *a.field;
  TensorPairSum r{a.field, a.m, a.n + b.n, {}};
  r.blocks.resize(r.n + 1);
  for (int i = 0; i <= a.n; ++i)
    for (const auto& [k1, c1] : a.blocks[i])
      for (int j = 0; j <= b.n; ++j)
        for (const auto& [k2, c2] : b.blocks[j]) {
          Word l = k1.first, rr = k1.second;
          l.insert(l.end(), k2.first.begin(), k2.first.end());
          rr.insert(rr.end(), k2.second.begin(), k2.second.end());
          add_pair(r.blocks[i + j], f, {std::move(l), std::move(rr)}, f.mul(c1, c2));
        }
  return r;
}

Tensor mu_apply(const TensorPairSum& s, const std::function<Tensor(const Tensor&)>& fl,
                const std::function<Tensor(const Tensor&)>& gr) {
  Tensor out(s.field, s.m, s.n);
  for (int i = 0; i <= s.n; ++i)
    for (const auto& [k, c] : s.blocks[i]) {
      Tensor l = fl(Tensor::word(s.field, s.m, k.first));
      Tensor r = gr(Tensor::word(s.field, s.m, k.second));
      out = out + scale(c, concat(l, r));
    }
  return out;
}

std::uint64_t ipow(std::uint64_t b, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

std::uint64_t word_index(const Word& w, int m) {
  std::uint64_t idx = 0;
  for (auto l : w) idx = idx * std::uint64_t(m) + std::uint64_t(l - 1);
  return idx;
}

Word index_word(std::uint64_t idx, int m, int n) {
  Word w(n);
  for (int i = n - 1; i >= 0; --i) {
    w[i] = std::uint8_t(idx % m + 1);
    idx /= m;
  }
  return w;
}

std::vector<Scalar> to_dense(const Tensor& t) {
  std::uint64_t d = ipow(t.m, t.n);
  if (d > kDenseLimit) throw Error(ErrorKind::DimensionTooLarge, "m^n exceeds dense limit");
  std::vector<Scalar> v(d);
  for (const auto& [w, c] : t.terms) v[word_index(w, t.m)] = c;
  return v;
}

Tensor from_dense(FieldPtr f, int m, int n, const std::vector<Scalar>& v) {
  Tensor t(std::move(f), m, n);
  for (std::uint64_t i = 0; i < v.size(); ++i)
    if (v[i].v) t.terms.emplace(index_word(i, m, n), v[i]);
  return t;
}

Subspace primitives(int n, int m, FieldPtr field) {
  if (n < 1) throw Error(ErrorKind::DegreeOutOfRange, "primitives need n >= 1");
  const Field& f = *field;
  std::uint64_t D = ipow(m, n);
  if (D > kDenseLimit) throw Error(ErrorKind::DimensionTooLarge, "m^n exceeds dense limit");
  // psi preserves letter content, so the kernel splits over content classes
  std::map<std::vector<int>, std::vector<std::uint64_t>> classes;
  for (std::uint64_t i = 0; i < D; ++i) {
    Word w = index_word(i, m, n);
    std::vector<int> content(m, 0);
    for (auto l : w) ++content[l - 1];
    classes[content].push_back(i);
  }
  Matrix out(0, D);
  for (const auto& [content, words] : classes) {
    std::unordered_map<std::uint64_t, std::size_t> col;
    std::vector<std::vector<std::pair<std::size_t, int>>> rows(words.size());
    for (std::size_t r = 0; r < words.size(); ++r) {
      Word w = index_word(words[r], m, n);
      std::map<std::size_t, int> counts;
      for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        int d = __builtin_popcount(mask);
        if (2 * d > n) continue;  // the swapped half carries the same data
        std::uint64_t li = 0, ri = 0;
        for (int i = 0; i < n; ++i) {
          if (mask >> i & 1)
            li = li * m + (w[i] - 1);
          else
            ri = ri * m + (w[i] - 1);
        }
        std::uint64_t key = (std::uint64_t(d) << 56) ^ (li * ipow(m, n - d) + ri);
        auto [it, fresh] = col.emplace(key, col.size());
        ++counts[it->second];
      }
      for (auto [c, k] : counts) rows[r].emplace_back(c, k);
    }
    Matrix a(words.size(), col.size());
    for (std::size_t r = 0; r < words.size(); ++r)
      for (auto [c, k] : rows[r]) a(r, c) = f.from_int(k);
    Matrix ker = left_kernel(f, a);
    for (std::size_t i = 0; i < ker.rows; ++i) {
      std::vector<Scalar> v(D);
      for (std::size_t r = 0; r < words.size(); ++r) v[words[r]] = ker(i, r);
      out.append_row(v);
    }
  }
  return Subspace::span(f, std::move(out));
}

}  // namespace liesplit
