#include "liesplit/functors.hpp"

#include <cctype>
#include <map>

#include "liesplit/error.hpp"

namespace liesplit {

FunctorSpec FunctorSpec::leaf(FunctorKind k, int n) {
  FunctorSpec s;
  s.kind = k;
  s.n = n;
  return s;
}

FunctorSpec FunctorSpec::node(FunctorKind k, FunctorSpec a, FunctorSpec b) {
  FunctorSpec s;
  s.kind = k;
  s.children = {std::make_shared<const FunctorSpec>(std::move(a)), std::make_shared<const FunctorSpec>(std::move(b))};
  return s;
}

namespace {

struct Parser {
  std::string s;
  std::size_t i = 0;
  FieldPtr f;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(i) + " in '" + s + "'");
  }
  bool eat(const std::string& tok) {
    if (s.compare(i, tok.size(), tok) == 0) {
      i += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!eat(tok)) fail("expected '" + tok + "'");
  }
  int number() {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected a number");
    if (j - i > 4) fail("number too large");
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return v;
  }
  FunctorSpec expr() {
    FunctorSpec a = term();
    while (eat("+")) a = FunctorSpec::node(FunctorKind::Sum, std::move(a), term());
    return a;
  }
  FunctorSpec term() {
    FunctorSpec a = factor();
    while (eat("*")) a = FunctorSpec::node(FunctorKind::TensorProd, std::move(a), factor());
    return a;
  }
  FunctorSpec factor() {
    if (eat("(")) {
      FunctorSpec a = expr();
      expect(")");
      return a;
    }
    if (eat("[")) {
      FunctorSpec a = expr();
      expect(",");
      FunctorSpec b = expr();
      expect("]");
      return FunctorSpec::node(FunctorKind::Bracket, std::move(a), std::move(b));
    }
    if (eat("T(")) return closed(FunctorKind::Tn);
    if (eat("Lres(")) return closed(FunctorKind::Lres);
    if (eat("L(")) return closed(FunctorKind::Ln);
    if (eat("L")) {
      int k = number();
      if (!eat("∘") && !eat("o")) fail("expected composition sign");
      FunctorSpec inner = factor();
      FunctorSpec c;
      c.kind = FunctorKind::Compose;
      c.n = k;
      c.children = {std::make_shared<const FunctorSpec>(std::move(inner))};
      if (k < 1) fail("L_k needs k >= 1");
      return c;
    }
    if (eat("B{")) {
      FunctorSpec b;
      b.kind = FunctorKind::SubHopf;
      if (!eat("}")) {
        do b.gens.push_back(number());
        while (eat(","));
        expect("}");
      }
      for (int g : b.gens)
        if (g < 1) fail("generating degrees must be positive");
      return b;
    }
    if (eat("C(")) {
      FunctorSpec c;
      c.kind = FunctorKind::Closure;
      c.seed = seed();
      c.n = c.seed->n;
      expect(")");
      return c;
    }
    fail("unexpected input");
  }
  FunctorSpec closed(FunctorKind k) {
    int n = number();
    expect(")");
    if (n < 1) fail("degree must be positive");
    return FunctorSpec::leaf(k, n);
  }
  // sum of optionally scaled words x1x2..., letters numbered from 1
  Tensor seed() {
    std::vector<std::pair<Word, long>> terms;
    int maxl = 0;
    bool first = true;
    while (i < s.size() && s[i] != ')') {
      long sign = 1;
      if (eat("-"))
        sign = -1;
      else if (!eat("+") && !first)
        fail("expected + or -");
      first = false;
      long c = 1;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) c = number();
      Word w;
      while (eat("x")) {
        int l = number();
        if (l < 1 || l > 255) fail("letter index out of range");
        w.push_back(std::uint8_t(l));
        maxl = std::max(maxl, l);
      }
      if (w.empty()) fail("expected a word");
      terms.emplace_back(std::move(w), sign * c);
    }
    if (terms.empty()) fail("empty seed");
    int n = int(terms[0].first.size());
    Tensor t(f, maxl, n);
    for (auto& [w, c] : terms) {
      if (int(w.size()) != n) fail("seed is not homogeneous");
      t.add_term(w, f->from_int(c));
    }
    return t;
  }
};

std::size_t checked_ambient(int m, int q) {
  std::uint64_t D = ipow(m, q);
  if (D > kDenseLimit) throw Error(ErrorKind::DimensionTooLarge, "T_q(V) exceeds the dense limit");
  return D;
}

Graded empty_graded(int m, int cap) {
  Graded g;
  for (int q = 0; q <= cap; ++q) g.push_back(Subspace(q <= 20 && ipow(m, q) <= kDenseLimit ? ipow(m, q) : 0));
  return g;
}

template <class Op>
Graded combine(const Graded& a, const Graded& b, int m, const Field& f, int cap, Op op) {
  Graded out = empty_graded(m, cap);
  for (int x = 0; x <= cap; ++x)
    for (int y = 0; x + y <= cap; ++y) {
      if (a[x].dim() == 0 || b[y].dim() == 0) continue;
      SpanBuilder sb(checked_ambient(m, x + y));
      for (std::size_t i = 0; i < a[x].dim(); ++i)
        for (std::size_t j = 0; j < b[y].dim(); ++j) sb.add(f, op(a[x].basis().row_vec(i), b[y].basis().row_vec(j)));
      out[x + y] = sum(f, out[x + y], sb.finish(f));
    }
  return out;
}

}  // namespace

FunctorSpec parse_functor(const std::string& text, FieldPtr f) {
  Parser p;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) p.s += c;
  p.f = std::move(f);
  FunctorSpec out = p.expr();
  if (p.i != p.s.size()) p.fail("trailing input");
  return out;
}

std::string to_string(const FunctorSpec& spec) {
  switch (spec.kind) {
    case FunctorKind::Tn:
      return "T(" + std::to_string(spec.n) + ")";
    case FunctorKind::Ln:
      return "L(" + std::to_string(spec.n) + ")";
    case FunctorKind::Lres:
      return "Lres(" + std::to_string(spec.n) + ")";
    case FunctorKind::Closure: {
      std::string out = "C(";
      bool first = true;
      for (const auto& [w, c] : spec.seed->terms) {
        if (!first) out += "+";
        first = false;
        if (c.v != 1) out += std::to_string(c.v);
        for (auto l : w) out += "x" + std::to_string(l);
      }
      return out + ")";
    }
    case FunctorKind::Bracket:
      return "[" + to_string(*spec.children[0]) + "," + to_string(*spec.children[1]) + "]";
    case FunctorKind::TensorProd:
      return "(" + to_string(*spec.children[0]) + "*" + to_string(*spec.children[1]) + ")";
    case FunctorKind::Sum:
      return "(" + to_string(*spec.children[0]) + "+" + to_string(*spec.children[1]) + ")";
    case FunctorKind::Compose:
      return "L" + std::to_string(spec.n) + "o" + to_string(*spec.children[0]);
    case FunctorKind::SubHopf: {
      std::string out = "B{";
      for (std::size_t i = 0; i < spec.gens.size(); ++i) out += (i ? "," : "") + std::to_string(spec.gens[i]);
      return out + "}";
    }
  }
  return {};
}

int degree(const FunctorSpec& spec) {
  switch (spec.kind) {
    case FunctorKind::Tn:
    case FunctorKind::Ln:
    case FunctorKind::Lres:
    case FunctorKind::Closure:
      return spec.n;
    case FunctorKind::Bracket:
    case FunctorKind::TensorProd: {
      int a = degree(*spec.children[0]), b = degree(*spec.children[1]);
      return a < 0 || b < 0 ? -1 : a + b;
    }
    case FunctorKind::Sum: {
      int a = degree(*spec.children[0]), b = degree(*spec.children[1]);
      return a == b ? a : -1;
    }
    case FunctorKind::Compose: {
      int d = degree(*spec.children[0]);
      return d < 0 ? -1 : spec.n * d;
    }
    case FunctorKind::SubHopf:
      return -1;
  }
  return -1;
}

std::vector<Scalar> concat_dense(const Field& f, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].v) f.axpy(out.data() + i * b.size(), a[i], b.data(), b.size());
  return out;
}

std::vector<Scalar> bracket_dense(const Field& f, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  auto ab = concat_dense(f, a, b);
  auto ba = concat_dense(f, b, a);
  f.axpy(ab.data(), f.neg(f.one()), ba.data(), ab.size());
  return ab;
}

std::vector<Scalar> apply_dense(const Field& f, const Matrix& a, int n, const std::vector<Scalar>& v) {
  std::size_t mi = a.rows, mo = a.cols;
  std::vector<Scalar> cur = v;
  for (int k = 0; k < n; ++k) {
    std::size_t pre = ipow(mo, k), suf = ipow(mi, n - k - 1);
    std::vector<Scalar> next(pre * mo * suf);
    for (std::size_t x = 0; x < pre; ++x)
      for (std::size_t d = 0; d < mi; ++d) {
        const Scalar* src = cur.data() + (x * mi + d) * suf;
        for (std::size_t d2 = 0; d2 < mo; ++d2)
          if (a(d, d2).v) f.axpy(next.data() + (x * mo + d2) * suf, a(d, d2), src, suf);
      }
    cur = std::move(next);
  }
  return cur;
}

Matrix tensor_power_matrix(const Field& f, const Matrix& a, int n) {
  std::size_t D = ipow(a.rows, n);
  Matrix out(0, ipow(a.cols, n));
  for (std::size_t w = 0; w < D; ++w) {
    std::vector<Scalar> e(D);
    e[w] = f.one();
    out.append_row(apply_dense(f, a, n, e));
  }
  return out;
}

std::vector<Matrix> monoid_generators(int m, const Field& f) {
  std::vector<Matrix> gens;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      std::uint32_t c = 1;
      for (int t = 0; t < f.e(); ++t, c *= std::uint32_t(f.p())) {
        Matrix a = identity(m);
        a(i, j) = {c};
        gens.push_back(a);
      }
    }
  if (f.generator() != f.one())
    for (int i = 0; i < m; ++i) {
      Matrix a = identity(m);
      a(i, i) = f.generator();
      gens.push_back(a);
    }
  for (int i = 0; i < m; ++i) {
    Matrix a = identity(m);
    a(i, i) = f.zero();
    gens.push_back(a);
  }
  return gens;
}

Subspace close_under_monoid(const Field& f, Subspace s, int m, int n) {
  auto gens = monoid_generators(m, f);
  IncrementalBasis ib(s.ambient());
  for (std::size_t i = 0; i < s.dim(); ++i) ib.add(f, s.basis().row_vec(i));
  for (std::size_t i = 0; i < ib.dim(); ++i)
    for (const auto& g : gens) ib.add(f, apply_dense(f, g, n, ib.row(i)));
  return ib.subspace(f);
}

Subspace gl_closure(const Tensor& seed, int m) {
  const Field& f = *seed.field;
  int N = seed.m, n = seed.n;
  if (n < 1) throw Error(ErrorKind::DegreeOutOfRange, "closure needs n >= 1");
  checked_ambient(std::max(N, m), n);
  Subspace s = Subspace::span(f, ipow(N, n), {to_dense(seed)});
  if (N > m) s = close_under_monoid(f, s, N, n);
  Matrix j(N, m);
  for (int i = 0; i < std::min(N, m); ++i) j(i, i) = f.one();
  SpanBuilder sb(ipow(m, n));
  for (std::size_t i = 0; i < s.dim(); ++i) sb.add(f, apply_dense(f, j, n, s.basis().row_vec(i)));
  return close_under_monoid(f, sb.finish(f), m, n);
}

Graded subhopf_evaluate(const std::vector<int>& gens, int cap, int m, FieldPtr fp) {
  const Field& f = *fp;
  if (cap < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative cap");
  if (ipow(m, cap) > (std::uint64_t(1) << 16)) throw Error(ErrorKind::CapExceeded, "sub Hopf algebra cap exceeds 2^16");
  std::map<int, Subspace> lie;
  for (int g : gens)
    if (g >= 1 && g <= cap && !lie.count(g)) lie.emplace(g, lyndon_basis(g, m, fp));
  Graded B;
  B.push_back(Subspace::whole(1));
  for (int q = 1; q <= cap; ++q) {
    SpanBuilder sb(ipow(m, q));
    for (const auto& [g, L] : lie) {
      if (g > q) continue;
      const Subspace& lower = B[q - g];
      for (std::size_t i = 0; i < lower.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
          sb.add(f, concat_dense(f, lower.basis().row_vec(i), L.basis().row_vec(j)));
    }
    B.push_back(sb.finish(f));
  }
  return B;
}

Indecomposables q_n_indecomposables(const Graded& B, int q, int m, const Field& f) {
  if (q < 1 || q >= int(B.size())) throw Error(ErrorKind::CapExceeded, "degree beyond the evaluated range");
  SpanBuilder sb(ipow(m, q));
  for (int i = 1; i < q; ++i)
    for (std::size_t a = 0; a < B[i].dim(); ++a)
      for (std::size_t b = 0; b < B[q - i].dim(); ++b)
        sb.add(f, concat_dense(f, B[i].basis().row_vec(a), B[q - i].basis().row_vec(b)));
  Indecomposables out;
  out.decomposable = intersect(f, sb.finish(f), B[q]);
  out.complement = complement(f, B[q], out.decomposable);
  out.dim = out.complement.dim();
  return out;
}

Graded evaluate(const FunctorSpec& spec, int m, FieldPtr fp, int cap) {
  const Field& f = *fp;
  if (m < 1) throw Error(ErrorKind::IndexOutOfRange, "m must be positive");
  int d = degree(spec);
  if (d > cap) throw Error(ErrorKind::CapExceeded, "functor degree exceeds the cap");
  Graded out = empty_graded(m, cap);
  switch (spec.kind) {
    case FunctorKind::Tn:
      out[d] = Subspace::whole(checked_ambient(m, d));
      break;
    case FunctorKind::Ln:
      out[d] = lyndon_basis(d, m, fp);
      break;
    case FunctorKind::Lres:
      out[d] = restricted_lie_power(d, m, fp);
      break;
    case FunctorKind::Closure:
      out[d] = gl_closure(*spec.seed, m);
      break;
    case FunctorKind::Bracket:
      return combine(evaluate(*spec.children[0], m, fp, cap), evaluate(*spec.children[1], m, fp, cap), m, f, cap,
                     [&](const auto& a, const auto& b) { return bracket_dense(f, a, b); });
    case FunctorKind::TensorProd:
      return combine(evaluate(*spec.children[0], m, fp, cap), evaluate(*spec.children[1], m, fp, cap), m, f, cap,
                     [&](const auto& a, const auto& b) { return concat_dense(f, a, b); });
    case FunctorKind::Sum: {
      auto a = evaluate(*spec.children[0], m, fp, cap);
      auto b = evaluate(*spec.children[1], m, fp, cap);
      for (int q = 0; q <= cap; ++q) out[q] = sum(f, a[q], b[q]);
      break;
    }
    case FunctorKind::Compose: {
      int inner = degree(*spec.children[0]);
      if (inner < 0) throw Error(ErrorKind::DegreeMismatch, "composition needs a homogeneous inner functor");
      out[d] = lie_power_of(f, evaluate(*spec.children[0], m, fp, inner)[inner], spec.n, m, inner);
      break;
    }
    case FunctorKind::SubHopf: {
      auto B = subhopf_evaluate(spec.gens, cap, m, fp);
      return B;
    }
  }
  return out;
}

Subspace lie_power_of(const Field& f, const Subspace& U, int k, int m, int d) {
  if (k == 1) return U;
  int r = int(U.dim());
  SpanBuilder sb(checked_ambient(m, k * d));
  std::map<Word, std::vector<Scalar>> memo;
  std::function<std::vector<Scalar>(const Word&)> br = [&](const Word& w) -> std::vector<Scalar> {
    if (w.size() == 1) return U.basis().row_vec(w[0] - 1);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    auto [l, rr] = standard_factorization(w);
    auto v = bracket_dense(f, br(l), br(rr));
    memo.emplace(w, v);
    return v;
  };
  if (r > 0 && r < 256)
    for (const auto& w : lyndon_words(k, r)) sb.add(f, br(w.letters));
  else if (r >= 256)
    throw Error(ErrorKind::DimensionTooLarge, "too many generators for a Lie power");
  return sb.finish(f);
}

TnProjectiveCheck functorial_tn_projective_check(const Subspace& M, int n, int m, FieldPtr fp) {
  const Field& f = *fp;
  TnProjectiveCheck out;
  std::size_t D = checked_ambient(m, n), d = M.dim();
  if (d == 0) {
    out.holds = out.retraction = out.lifting = true;
    out.retraction_map = Matrix(D, 0);
    out.lifting_map = Matrix(0, D);
    return out;
  }
  if (D * d > 20000) throw Error(ErrorKind::DimensionTooLarge, "projectivity system too large");
  const Matrix& B = M.basis();
  std::vector<Matrix> G, GM;
  for (const auto& g : monoid_generators(m, f)) {
    G.push_back(tensor_power_matrix(f, g, n));
    auto gm = express_rows(f, B, multiply(f, B, G.back()));
    if (!gm) throw Error(ErrorKind::NotStable, "M is not stable under substitutions");
    GM.push_back(*gm);
  }
  std::size_t U = D * d;
  Scalar minus1 = f.neg(f.one());

  // retraction R (D x d): B R = I and G R = R G_M
  {
    Matrix A(0, U);
    std::vector<Scalar> rhs;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t b = 0; b < d; ++b) {
        std::vector<Scalar> row(U);
        for (std::size_t a = 0; a < D; ++a) row[a * d + b] = B(i, a);
        A.append_row(row);
        rhs.push_back(i == b ? f.one() : f.zero());
      }
    for (std::size_t g = 0; g < G.size(); ++g)
      for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          std::vector<Scalar> row(U);
          for (std::size_t c = 0; c < D; ++c)
            if (G[g](a, c).v) row[c * d + b] = f.add(row[c * d + b], G[g](a, c));
          for (std::size_t c = 0; c < d; ++c)
            if (GM[g](c, b).v) row[a * d + c] = f.add(row[a * d + c], f.mul(minus1, GM[g](c, b)));
          A.append_row(row);
          rhs.push_back(f.zero());
        }
    if (auto x = solve_affine(f, A, rhs)) {
      out.retraction = true;
      Matrix R(D, d);
      R.data = *x;
      out.retraction_map = R;
    }
  }
  // lifting S (d x D): S beta = B and G_M S = S G
  {
    Matrix beta(0, D);
    for (std::size_t w = 0; w < D; ++w) beta.append_row(to_dense(left_normed(Tensor::word(fp, m, index_word(w, m, n)))));
    Matrix A(0, U);
    std::vector<Scalar> rhs;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t c = 0; c < D; ++c) {
        std::vector<Scalar> row(U);
        for (std::size_t a = 0; a < D; ++a) row[i * D + a] = beta(a, c);
        A.append_row(row);
        rhs.push_back(B(i, c));
      }
    for (std::size_t g = 0; g < G.size(); ++g)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = 0; c < D; ++c) {
          std::vector<Scalar> row(U);
          for (std::size_t j = 0; j < d; ++j)
            if (GM[g](i, j).v) row[j * D + c] = f.add(row[j * D + c], GM[g](i, j));
          for (std::size_t a = 0; a < D; ++a)
            if (G[g](a, c).v) row[i * D + a] = f.add(row[i * D + a], f.mul(minus1, G[g](a, c)));
          A.append_row(row);
          rhs.push_back(f.zero());
        }
    if (auto x = solve_affine(f, A, rhs)) {
      out.lifting = true;
      Matrix S(d, D);
      S.data = *x;
      out.lifting_map = S;
    }
  }
  out.holds = out.retraction && out.lifting;
  return out;
}

bool equivariant_iso_check(const Subspace& A, int na, const Subspace& B, int nb, const Matrix& images, int m,
                           const Field& f) {
  if (A.dim() != B.dim() || images.rows != A.dim() || images.cols != B.ambient()) return false;
  for (std::size_t i = 0; i < images.rows; ++i)
    if (!B.contains(f, images.row_vec(i))) return false;
  if (rank(f, images) != B.dim()) return false;
  for (const auto& g : monoid_generators(m, f)) {
    Matrix ga(0, A.ambient()), gi(0, B.ambient());
    for (std::size_t i = 0; i < A.dim(); ++i) {
      ga.append_row(apply_dense(f, g, na, A.basis().row_vec(i)));
      gi.append_row(apply_dense(f, g, nb, images.row_vec(i)));
    }
    auto c = express_rows(f, A.basis(), ga);
    if (!c) return false;
    if (!(multiply(f, *c, images) == gi)) return false;
  }
  return true;
}

}  // namespace liesplit
