// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "liesplit/decomp.hpp"
#include "liesplit/error.hpp"
#include "liesplit/hilton.hpp"
#include "liesplit/report.hpp"

using namespace liesplit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// accumulates failed sub-checks with a short reason each
struct Checker {
  Outcome out;
  std::ostringstream notes;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      out.pass = false;
      notes << (notes.tellp() ? "; " : "") << "failed: " << what;
    }
  }
  void note(const std::string& s) { notes << (notes.tellp() ? "; " : "") << s; }
  Outcome done() {
    out.detail = notes.str();
    return out;
  }
};

std::vector<Word> all_words(int m, int n) {
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < ipow(m, n); ++i) out.push_back(index_word(i, m, n));
  return out;
}

using PairMap = std::map<std::pair<Word, Word>, Scalar>;

PairMap flatten(const TensorPairSum& s) {
  PairMap out;
  for (const auto& b : s.blocks)
    for (const auto& kv : b) out.insert(kv);
  return out;
}

// shuffle coproduct by subsets of letter positions
PairMap coproduct_oracle(const Field& f, const Word& w) {
  PairMap out;
  std::size_t n = w.size();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    Word a, b;
    for (std::size_t i = 0; i < n; ++i) (s >> i & 1 ? a : b).push_back(w[i]);
    auto& c = out[{a, b}];
    c = f.add(c, f.one());
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.v ? std::next(it) : out.erase(it);
  return out;
}

using Triple = std::map<std::tuple<Word, Word, Word>, Scalar>;

Triple iterate(const Tensor& t, bool left) {
  const Field& f = *t.field;
  Triple out;
  for (const auto& [k, c] : flatten(coproduct(t))) {
    const Word& inner = left ? k.first : k.second;
    for (const auto& [k2, c2] : flatten(coproduct(Tensor::word(t.field, t.m, inner)))) {
      auto key = left ? std::make_tuple(k2.first, k2.second, k.second) : std::make_tuple(k.first, k2.first, k2.second);
      auto& s = out[key];
      s = f.add(s, f.mul(c, c2));
      if (!s.v) out.erase(key);
    }
  }
  return out;
}

std::int64_t mobius_oracle(std::int64_t n) {
  int sign = 1;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  return n > 1 ? -sign : sign;
}

std::int64_t witt_oracle(int n, int m) {
  std::int64_t s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      std::int64_t pw = 1;
      for (int i = 0; i < n / d; ++i) pw *= m;
      s += mobius_oracle(d) * pw;
    }
  return s / n;
}

// restricted Lie algebra: p^r-th powers of a basis of L_{n/p^r}
std::int64_t restricted_dim_oracle(int n, int m, int p) {
  std::int64_t s = 0;
  for (int q = n; q >= 1; q /= p) {
    s += witt_oracle(q, m);
    if (q % p) break;
  }
  return s;
}

bool is_trivial(const SigmaModule& M) {
  for (const auto& a : M.actions)
    if (!(a == identity(M.dim))) return false;
  return true;
}

Outcome hopf_axioms() {
  Checker c;
  std::size_t words = 0;
  for (int p : {2, 3}) {
    auto f = field_ptr(p, 1);
    for (int m = 1; m <= 3; ++m)
      for (int n = 0; n <= 6; ++n)
        for (const auto& w : all_words(m, n)) {
          ++words;
          Tensor t = Tensor::word(f, m, w);
          auto psi = coproduct(t);
          c.check(flatten(psi) == coproduct_oracle(*f, w), "coproduct matches the shuffle oracle");
          c.check(iterate(t, true) == iterate(t, false), "coassociativity");
          c.check(swap(psi) == psi, "cocommutativity");
          Tensor r = mu_apply(psi, antipode, [](const Tensor& x) { return x; });
          Tensor unit = n == 0 ? Tensor::unit(f, m) : Tensor(f, m, n);
          c.check(r == scale(counit(t), unit) || (n > 0 && r.is_zero()), "chi * id = unit counit");
          // signed reversal
          Word rev(w.rbegin(), w.rend());
          Scalar sg = n % 2 ? f->neg(f->one()) : f->one();
          c.check(antipode(t) == Tensor::word(f, m, rev, sg), "antipode is signed reversal");
        }
    for (int m = 1; m <= 3; ++m)
      for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b <= 6; ++b)
          for (const auto& u : all_words(m, a))
            for (const auto& v : all_words(m, b)) {
              Tensor tu = Tensor::word(f, m, u), tv = Tensor::word(f, m, v);
              c.check(coproduct(concat(tu, tv)) == multiply(coproduct(tu), coproduct(tv)), "psi is an algebra map");
            }
  }
  c.note(std::to_string(words) + " basis words");
  return c.done();
}

Outcome theta_on_primitives() {
  Checker c;
  std::size_t tested = 0;
  for (auto [p, e] : {std::pair{2, 2}, std::pair{3, 1}}) {
    auto f = field_ptr(p, e);
    Scalar zeta = p == 2 ? f->primitive_root(3) : f->from_int(2);
    auto th = theta(f, zeta, 6);
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= (m == 3 ? 5 : 6); ++n) {
        Subspace P = primitives(n, m, f);
        Scalar factor = f->sub(f->pow(zeta, n), f->one());
        for (std::size_t i = 0; i < P.dim(); ++i) {
          Tensor a = from_dense(f, m, n, P.basis().row_vec(i));
          c.check(apply(th, a) == scale(factor, a), "theta(a) = (zeta^n - 1) a");
          ++tested;
        }
      }
  }
  c.note(std::to_string(tested) + " primitive basis vectors");
  return c.done();
}

Outcome lie_dimensions() {
  Checker c;
  for (int p : {2, 3}) {
    auto f = field_ptr(p, 1);
    for (int n = 1; n <= 6; ++n) c.check(lie_module(n, f).module.dim == factorial(n - 1), "dim Lie(n) = (n-1)!");
  }
  auto f = field_ptr(2, 1);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 8; ++n) {
      auto d = std::int64_t(lyndon_basis(n, m, f).dim());
      c.check(d == witt_dim(n, m) && d == witt_oracle(n, m), "lyndon basis dim = witt");
    }
  c.check(witt_dim(12, 2) == 335 && witt_oracle(12, 2) == 335, "witt(12,2) = 335");
  c.check(witt_dim(6, 2) == 9 && witt_oracle(6, 2) == 9, "witt(6,2) = 9");
  return c.done();
}

Outcome example_2_8() {
  Checker c;
  auto f = field_ptr(2, 1);
  auto gL = gamma(f, lyndon_basis(2, 2, f), lyndon_basis(2, 1, f), 2, 2);
  auto gR = gamma(f, restricted_lie_power(2, 2, f), restricted_lie_power(2, 1, f), 2, 2);
  c.check(gL.dim == 1 && gR.dim == 1, "gamma_2 is one dimensional");
  c.check(is_trivial(gL) && is_trivial(gR), "gamma_2 is trivial");
  c.check(gL.ambient && gR.ambient && gL.ambient->basis == gR.ambient->basis, "gamma_2(L_2) = gamma_2(Lres_2)");
  auto W = tensor_power_module(f, 2, 2);
  auto T = tensor_over_group(gL, W);
  c.check(T.dim == 3, "gamma_2(L_2) (x) V^2 = S_2(V) of dim 3");
  auto phi = phi_map(gL, 2);
  auto L2 = lyndon_basis(2, 2, f);
  auto R2 = restricted_lie_power(2, 2, f);
  c.check(phi.image == L2, "phi image = L_2(V)");
  c.check(R2.contains(*f, L2) && R2.dim() > L2.dim(), "L_2(V) strictly inside Lres_2(V)");
  for (int m = 1; m <= 3; ++m) c.check(tor1_dim_tensor_power(gL, m) > 0, "Tor_1 > 0 at m = " + std::to_string(m));
  return c.done();
}

Outcome example_3_10() {
  Checker c;
  auto f = field_ptr(3, 1);
  auto lie = lyndon_basis(2, 2, f).basis().row_vec(0);
  Matrix rows(0, 8), images(0, 8);
  for (int a = 0; a < 2; ++a) {
    std::vector<Scalar> x(2);
    x[a] = f->one();
    rows.append_row(concat_dense(*f, lie, x));
    images.append_row(bracket_dense(*f, lie, x));
  }
  auto A = Subspace::span(*f, rows);
  images = multiply(*f, *express_rows(*f, rows, A.basis()), images);
  auto L3 = lyndon_basis(3, 2, f);
  c.check(equivariant_iso_check(A, 3, L3, 3, images, 2, *f), "L_2(V) (x) V = L_3(V)");
  auto chk = functorial_tn_projective_check(L3, 3, 2, f);
  c.note(std::string("retraction ") + (chk.retraction ? "found" : "infeasible") + ", lifting " +
         (chk.lifting ? "found" : "infeasible"));
  c.check(chk.holds, "functorial_tn_projective_check(L_3(V)) = true");
  auto split = max_projective_summand(lie_module(3, f).module, 1);
  c.check(split.projective.module.dim == 0, "max projective summand of Lie(3) = 0");
  return c.done();
}

Outcome prop_3_1() {
  Checker c;
  for (int p : {2, 3}) {
    auto f = field_ptr(p, 1);
    for (int n = 1; n <= 5; ++n) {
      auto lie = lie_module(n, f).module;
      for (int m = 1; m <= 3; ++m) {
        auto W = tensor_power_module(f, n, m);
        std::size_t lhs = tensor_over_group(lie, W).dim;
        std::size_t tor = tor1_dim(lie, W);
        c.check(std::int64_t(lhs) == std::int64_t(tor) + witt_oracle(n, m),
                "p=" + std::to_string(p) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  }
  return c.done();
}

Outcome blocks() {
  Checker c;
  for (int p : {2, 3}) {
    auto r = block_decomposition(p, 6);
    std::string tag = "p=" + std::to_string(p);
    c.check(r.idempotents_exact, tag + " stage idempotents exact and commuting");
    c.check(r.coalgebra_compatible, tag + " coalgebra compatible through degree 5");
    for (const auto& b : r.blocks)
      for (int n = 0; n <= 6; ++n) {
        const auto& e = b.idempotent.components[n];
        c.check(e * e == e, tag + " final idempotent");
      }
    for (int n = 1; n <= 6; ++n) {
      int u = n;
      while (u % p == 0) u /= p;
      std::int64_t total = 0, claimed = 0;
      for (const auto& v : r.verdicts)
        if (v.n == n) {
          c.check(std::int64_t(v.primitives) == restricted_dim_oracle(n, 2, p), tag + " dim P_nT");
          total += std::int64_t(v.dim);
          if (v.block == u) claimed = std::int64_t(v.dim);
          else c.check(v.dim == 0, tag + " non-claiming block meets P_nT in 0");
        }
      c.check(claimed == restricted_dim_oracle(n, 2, p), tag + " claiming block has all of P_nT");
      c.check(total == claimed, tag + " verdicts partition P_nT");
    }
    c.note(tag + " GF(" + std::to_string(p) + "^" + std::to_string(r.field.e) + "), " +
           std::to_string(r.blocks.size()) + " blocks");
  }
  return c.done();
}

Outcome splitness_base_cases() {
  Checker c;
  auto f = field_ptr(2, 1);
  c.check(splitness_check({3}, 3, 3, f).verdict, "{3} cap 3 splits");
  auto two = splitness_check({2}, 2, 2, f);
  c.check(!two.verdict && two.certified, "{2} cap 2 does not split");
  auto r = splitness_check({3, 6}, 6, 2, f);
  c.check(r.verdict, "{3,6} cap 6 splits");
  std::int64_t expect = witt_oracle(6, 2) - witt_oracle(3, 2) * (witt_oracle(3, 2) - 1) / 2;
  c.check(std::int64_t(r.degrees[5].q_dim) == expect && expect == 8, "dim Q_6B = 8");
  return c.done();
}

Outcome hilton_example() {
  Checker c;
  auto degs = generated_degrees(2, {3}, {3}, 12);
  auto d = verify_theorem61(degs, 12, 2, 2, HiltonMode::Dims);
  std::multiset<std::int64_t> dims;
  for (const auto& t : d.terms) dims.insert(t.dim);
  c.check(d.sum == 335 && d.lie_dim == witt_oracle(12, 2), "sum 335");
  c.check(dims == std::multiset<std::int64_t>{3, 28, 272, 32}, "summands 3, 28, 272, 32");
  c.check(d.holds, "dimension mode");
  auto x = verify_theorem61(degs, 12, 2, 2, HiltonMode::Explicit);
  std::int64_t s = 0;
  for (auto v : x.explicit_dims) s += std::int64_t(v);
  c.check(x.direct_sum && s == 335, "explicit direct sum equal to L_12(V) inside V^12");
  return c.done();
}

Outcome cross_oracles() {
  Checker c;
  for (int p : {2, 3}) {
    auto f = field_ptr(p, 1);
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 6; ++n) {
        auto P = primitives(n, m, f);
        c.check(P == restricted_lie_power(n, m, f), "primitives = restricted Lie power");
        c.check(std::int64_t(P.dim()) == restricted_dim_oracle(n, m, p), "primitive count");
      }
  }
  for (int k = 1; k <= 3; ++k) {
    auto all = basic_products(std::vector<int>(k, 1), 6);
    std::map<std::vector<int>, std::int64_t> count;
    for (const auto& w : all) ++count[w.letter_counts];
    for (const auto& [counts, cnt] : count) c.check(multiplicity(counts) == cnt, "basic product count");
    std::vector<std::int64_t> per(7);
    for (const auto& w : all) ++per[w.weight];
    for (int n = 1; n <= 6; ++n) c.check(per[n] == witt_oracle(n, k), "basic products of weight n");
  }
  auto f = field_ptr(2, 1);
  for (auto gens : std::vector<std::vector<int>>{{3}, {3, 6}, {2, 3}, {1}, {3, 5, 6, 7}}) {
    auto B = subhopf_evaluate(gens, 8, 2, f);
    std::vector<std::int64_t> b;
    for (const auto& s : B) b.push_back(std::int64_t(s.dim()));
    c.check(hilbert_series_b_dims(hilbert_series_d_dims(b, 8), 8) == b, "Hilbert round trip");
  }
  return c.done();
}

std::string signature(const Decomposition& d) {
  std::vector<std::pair<std::size_t, std::size_t>> s;
  for (const auto& x : d.summands) s.push_back({x.module.dim, hom_dim(x.module, x.module)});
  std::sort(s.begin(), s.end());
  std::string out;
  for (auto [a, b] : s) out += std::to_string(a) + "/" + std::to_string(b) + " ";
  return out + (d.complete ? "complete" : "partial");
}

Outcome determinism() {
  Checker c;
  std::vector<RunConfig> cfgs;
  auto add = [&](RunConfig r) { cfgs.push_back(std::move(r)); };
  RunConfig w; w.command = "witt"; w.n = 12; add(w);
  RunConfig b; b.command = "block"; b.p = 3; b.cap = 4; add(b);
  RunConfig s; s.command = "split"; s.gens = {3, 6}; s.cap = 6; s.jobs = 3; add(s);
  RunConfig pr; pr.command = "projective"; pr.p = 3; pr.functor = "L(3)"; pr.n = 3; pr.seed = 11; add(pr);
  RunConfig h; h.command = "hilton"; h.gens = {3, 6, 12}; h.target = 12; add(h);
  RunConfig r11; r11.command = "report-1-1"; r11.M = {3}; r11.f = {3}; r11.cap = 12; add(r11);
  for (const auto& cfg : cfgs) {
    std::string first;
    for (int i = 0; i < 3; ++i) {
      auto out = run(cfg);
      c.check(out.exit_code == 0, cfg.command + " runs");
      std::string text = render(without_timing(out.report), "json");
      if (i == 0) first = text;
      else c.check(text == first, cfg.command + " byte-identical");
    }
  }
  std::vector<std::pair<std::string, SigmaModule>> mods{
      {"k(S3) mod 2", regular_module(field_ptr(2, 1), 3)},
      {"k(S3) mod 3", regular_module(field_ptr(3, 1), 3)},
      {"Lie(4) mod 2", lie_module(4, field_ptr(2, 1)).module},
      {"Lie(4) mod 3", lie_module(4, field_ptr(3, 1)).module},
      {"V^3 dim 2 mod 3", tensor_power_module(field_ptr(3, 1), 3, 2)}};
  for (const auto& [name, M] : mods) {
    std::string first;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      std::string sig = signature(indecomposable_decomposition(M, seed));
      if (seed == 0) first = sig;
      else c.check(sig == first, name + " signature stable");
    }
    c.note(name + ": " + first);
  }
  return c.done();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Hopf axioms on basis words", hopf_axioms},
      {"theta on primitives", theta_on_primitives},
      {"Witt and Lie dimensions", lie_dimensions},
      {"gamma_2 of L_2 in characteristic 2", example_2_8},
      {"L_3 in characteristic 3 with two generators", example_3_10},
      {"Lie(n) (x) V^n = Tor_1 + L_n(V)", prop_3_1},
      {"block decomposition through degree 6", blocks},
      {"splitness base cases", splitness_base_cases},
      {"Hilton-Milnor decomposition of L_12", hilton_example},
      {"cross-oracle invariants", cross_oracles},
      {"determinism", determinism},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = int(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("criterion %2d: %s  %s (%.1fs)%s%s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
