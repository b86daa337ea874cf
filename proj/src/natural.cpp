#include "liesplit/natural.hpp"

#include <unordered_map>

#include "liesplit/error.hpp"

namespace liesplit {

namespace {

void check_pair(const NaturalTransform& f, const NaturalTransform& g) {
  if (f.cap != g.cap) throw Error(ErrorKind::CapMismatch, "degree caps differ");
  if (!(f.field->params() == g.field->params())) throw Error(ErrorKind::FieldMismatch, "fields differ");
}

NaturalTransform blank(FieldPtr f, int cap) {
  if (cap < 0 || cap > kMaxGroupDegree) throw Error(ErrorKind::DegreeOutOfCap, "cap " + std::to_string(cap));
  NaturalTransform t{f, cap, {}, false};
  for (int n = 0; n <= cap; ++n) t.components.emplace_back(f, n);
  return t;
}

std::size_t hash_elem(const GroupAlgebraElement& a) {
  std::size_t h = 1469598103934665603ull;
  for (Scalar s : a.coeffs) h = (h ^ s.v) * 1099511628211ull;
  return h;
}

}  // namespace

NaturalTransform identity_transform(FieldPtr f, int cap) {
  NaturalTransform t = blank(f, cap);
  for (int n = 0; n <= cap; ++n) t.components[n] = GroupAlgebraElement::identity(f, n);
  t.is_coalgebra_map = true;
  return t;
}

NaturalTransform unit_counit_transform(FieldPtr f, int cap) {
  NaturalTransform t = blank(f, cap);
  t.components[0] = GroupAlgebraElement::identity(f, 0);
  t.is_coalgebra_map = true;
  return t;
}

NaturalTransform antipode_transform(FieldPtr f, int cap) {
  NaturalTransform t = blank(f, cap);
  for (int n = 0; n <= cap; ++n) {
    Perm rev(n);
    for (int i = 0; i < n; ++i) rev[i] = std::uint8_t(n - 1 - i);
    t.components[n].coeffs[perm_rank(rev)] = n % 2 ? f->neg(f->one()) : f->one();
  }
  t.is_coalgebra_map = true;
  return t;
}

NaturalTransform lambda_transform(FieldPtr f, Scalar zeta, int cap) {
  NaturalTransform t = blank(f, cap);
  for (int n = 0; n <= cap; ++n) t.components[n].coeffs[0] = f->pow(zeta, std::uint64_t(n));
  t.is_coalgebra_map = true;
  return t;
}

NaturalTransform conv(const NaturalTransform& f, const NaturalTransform& g) {
  check_pair(f, g);
  const Field& F = *f.field;
  NaturalTransform r = blank(f.field, f.cap);
  for (int n = 0; n <= f.cap; ++n) {
    GroupAlgebraElement& out = r.components[n];
    Perm pi(n);
    std::vector<std::uint8_t> left, right;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      left.clear();
      right.clear();
      for (int k = 0; k < n; ++k) (mask >> k & 1 ? left : right).push_back(std::uint8_t(k));
      int i = int(left.size()), j = n - i;
      const auto& fi = f.components[i];
      const auto& gj = g.components[j];
      const auto& pi_s = all_perms(i);
      const auto& pj_s = all_perms(j);
      for (std::size_t a = 0; a < fi.coeffs.size(); ++a) {
        Scalar ca = fi.coeffs[a];
        if (!ca.v) continue;
        for (int k = 0; k < i; ++k) pi[k] = left[pi_s[a][k]];
        for (std::size_t b = 0; b < gj.coeffs.size(); ++b) {
          Scalar cb = gj.coeffs[b];
          if (!cb.v) continue;
          for (int k = 0; k < j; ++k) pi[i + k] = right[pj_s[b][k]];
          std::size_t idx = perm_rank(pi);
          out.coeffs[idx] = F.add(out.coeffs[idx], F.mul(ca, cb));
        }
      }
    }
  }
  return r;
}

NaturalTransform compose(const NaturalTransform& f, const NaturalTransform& g) {
  check_pair(f, g);
  NaturalTransform r = blank(f.field, f.cap);
  for (int n = 0; n <= f.cap; ++n) r.components[n] = f.components[n] * g.components[n];
  r.is_coalgebra_map = f.is_coalgebra_map && g.is_coalgebra_map;
  return r;
}

NaturalTransform theta(FieldPtr f, Scalar zeta, int cap) {
  NaturalTransform t = conv(lambda_transform(f, zeta, cap), antipode_transform(f, cap));
  t.is_coalgebra_map = check_coalgebra_map(t);
  if (!t.is_coalgebra_map) throw Error(ErrorKind::NotCoalgebraMap, "theta failed the coproduct check");
  return t;
}

Tensor apply(const NaturalTransform& f, const Tensor& t) {
  if (t.n > f.cap) throw Error(ErrorKind::DegreeOutOfCap, "tensor degree above cap");
  return apply_group_algebra(f.components[t.n], t);
}

bool check_coalgebra_map(const NaturalTransform& f, int max_degree) {
  for (int n = 0; n <= std::min(max_degree, f.cap); ++n) {
    Word w(n);
    for (int i = 0; i < n; ++i) w[i] = std::uint8_t(i + 1);
    int m = std::max(n, 1);
    Tensor x = Tensor::word(f.field, m, w);
    TensorPairSum lhs = coproduct(apply(f, x));
    TensorPairSum rhs{f.field, m, n, {}};
    rhs.blocks.resize(n + 1);
    TensorPairSum split = coproduct(x);
    const Field& F = *f.field;
    for (int i = 0; i <= n; ++i)
      for (const auto& [k, c] : split.blocks[i]) {
        Tensor l = apply(f, Tensor::word(f.field, m, k.first));
        Tensor r = apply(f, Tensor::word(f.field, m, k.second));
        for (const auto& [lw, lc] : l.terms)
          for (const auto& [rw, rc] : r.terms) {
            auto& s = rhs.blocks[i][{lw, rw}];
            s = F.add(s, F.mul(c, F.mul(lc, rc)));
            if (!s.v) rhs.blocks[i].erase({lw, rw});
          }
      }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

EventualIdempotent eventual_idempotent(const GroupAlgebraElement& a) {
  std::size_t N = a.coeffs.size();
  // memoized a^(2^j) until 2^J >= dim, which bounds the index
  std::vector<GroupAlgebraElement> pw{a};
  std::uint64_t big = 1;
  while (big < N) {
    pw.push_back(pw.back() * pw.back());
    big <<= 1;
  }
  GroupAlgebraElement c = pw.back();  // = a^big, inside the cyclic part

  // period: least t with c a^t = c, baby step / giant step
  const std::uint64_t B = 512;
  std::unordered_multimap<std::size_t, std::uint64_t> baby;
  std::vector<GroupAlgebraElement> ys{c};
  std::uint64_t multiple = 0;
  GroupAlgebraElement y = c;
  for (std::uint64_t j = 1; j <= B; ++j) {
    y = y * a;
    if (y == c) {
      multiple = j;
      break;
    }
    ys.push_back(y);
  }
  if (!multiple) {
    for (std::uint64_t j = 0; j < ys.size(); ++j) baby.emplace(hash_elem(ys[j]), j);
    GroupAlgebraElement step = power(a, B), z = c;
    for (std::uint64_t i = 1; i <= B && !multiple; ++i) {
      z = z * step;
      auto range = baby.equal_range(hash_elem(z));
      for (auto it = range.first; it != range.second; ++it)
        if (ys[it->second] == z) {
          multiple = i * B - it->second;
          break;
        }
    }
    if (!multiple) throw Error(ErrorKind::TrialBudgetExhausted, "cycle longer than search budget");
  }
  std::uint64_t t = multiple;
  for (std::uint64_t r = 2; r <= t; ++r) {
    while (t % r == 0 && c * power(a, t / r) == c) t /= r;
  }
  // idempotent of the cyclic part
  std::uint64_t K = ((big + t - 1) / t) * t;
  GroupAlgebraElement e = power(a, K);

  // index: least s with a^s e = a^s (monotone), found bit by bit
  GroupAlgebraElement cur = GroupAlgebraElement::identity(a.field, a.n);
  std::uint64_t i = 0;
  for (int j = int(pw.size()) - 1; j >= 0; --j) {
    GroupAlgebraElement cand = cur * pw[j];
    if (!(cand * e == cand)) {
      cur = cand;
      i += std::uint64_t(1) << j;
    }
  }
  std::uint64_t s = i + 1;
  std::uint64_t k = ((s + t - 1) / t) * t;
  return {e, k, s, t};
}

NaturalTransform eventual_idempotent(const NaturalTransform& a) {
  NaturalTransform r = a;
  for (int n = 0; n <= a.cap; ++n) r.components[n] = eventual_idempotent(a.components[n]).e;
  return r;
}

Matrix as_operator(const GroupAlgebraElement& g, int m) {
  int n = g.n;
  std::uint64_t D = ipow(m, n);
  if (D > (std::uint64_t(1) << 14)) throw Error(ErrorKind::DimensionTooLarge, "operator too large");
  const Field& F = *g.field;
  Matrix M(D, D);
  const auto& ps = all_perms(n);
  for (std::uint64_t in = 0; in < D; ++in) {
    Word w = index_word(in, m, n);
    Word out(n);
    for (std::size_t k = 0; k < ps.size(); ++k) {
      Scalar c = g.coeffs[k];
      if (!c.v) continue;
      for (int i = 0; i < n; ++i) out[i] = w[ps[k][i]];
      std::uint64_t o = word_index(out, m);
      M(o, in) = F.add(M(o, in), c);
    }
  }
  return M;
}

Matrix as_operator(const NaturalTransform& f, int n, int m) {
  if (n < 0 || n > f.cap) throw Error(ErrorKind::DegreeOutOfCap, "degree above cap");
  return as_operator(f.components[n], m);
}

Matrix left_regular(const GroupAlgebraElement& g) {
  std::size_t N = g.coeffs.size();
  Matrix M(N, N);
  for (std::size_t j = 0; j < N; ++j) {
    GroupAlgebraElement b(g.field, g.n);
    b.coeffs[j] = {1};
    GroupAlgebraElement r = g * b;
    for (std::size_t i = 0; i < N; ++i) M(i, j) = r.coeffs[i];
  }
  return M;
}

}  // namespace liesplit
