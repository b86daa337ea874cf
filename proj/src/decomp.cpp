#include "liesplit/decomp.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "liesplit/error.hpp"
#include "liesplit/hilton.hpp"

namespace liesplit {

EventualImage eventual_image_chain(const NaturalTransform& f) {
  if (!f.is_coalgebra_map) throw Error(ErrorKind::NotCoalgebraMap, "eventual images need a coalgebra map");
  EventualImage out;
  out.idempotent = f;
  for (int n = 0; n <= f.cap; ++n) {
    auto ei = eventual_idempotent(f.components[n]);
    out.idempotent.components[n] = ei.e;
    out.images.push_back(Subspace::span(*f.field, transpose(left_regular(ei.e))));
    out.per_degree.push_back(std::move(ei));
  }
  return out;
}

int block_field_degree(int p, int cap) {
  int e = 1;
  for (int m = 2; m <= cap; ++m)
    if (std::gcd(m, p) == 1) e = std::lcm(e, minimal_extension_degree(p, m));
  if (e > 8)
    throw Error(ErrorKind::CapExceeded, "roots of unity up to " + std::to_string(cap) + " need GF(" +
                                            std::to_string(p) + "^" + std::to_string(e) + ")");
  return e;
}

namespace {

struct Chain {
  NaturalTransform r;
  std::vector<StageLog> log;
};

StageLog log_stage(const std::string& label, int m, const NaturalTransform& from, const NaturalTransform& e,
                   const std::vector<std::uint64_t>& k, int coalgebra_degree) {
  StageLog s{label, m, k, true, true, false};
  for (int n = 0; n <= e.cap; ++n) {
    const auto& x = e.components[n];
    s.idempotent &= x * x == x;
    s.commutes &= x * from.components[n] == from.components[n] * x;
  }
  s.coalgebra = check_coalgebra_map(e, coalgebra_degree);
  return s;
}

NaturalTransform eventual(const NaturalTransform& a, std::vector<std::uint64_t>& k) {
  NaturalTransform r = a;
  k.clear();
  for (int n = 0; n <= a.cap; ++n) {
    auto ei = eventual_idempotent(a.components[n]);
    r.components[n] = ei.e;
    k.push_back(ei.k);
  }
  r.is_coalgebra_map = a.is_coalgebra_map;
  return r;
}

Chain chain(NaturalTransform r, const std::vector<int>& ms, const std::map<int, NaturalTransform>& thetas,
            int coalgebra_degree) {
  Chain c{std::move(r), {}};
  for (int m : ms) {
    NaturalTransform step = compose(c.r, thetas.at(m));
    std::vector<std::uint64_t> k;
    c.r = eventual(step, k);
    c.log.push_back(log_stage("theta_" + std::to_string(m), m, step, c.r, k, coalgebra_degree));
  }
  return c;
}

}  // namespace

BlockReport block_decomposition(int p, int cap, int vdim, int coalgebra_degree) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, "p must be prime");
  if (cap < 1 || cap > 7) throw Error(ErrorKind::CapExceeded, "block decomposition needs 1 <= cap <= 7");
  int e = block_field_degree(p, cap);
  FieldPtr F = field_ptr(p, e);
  BlockReport rep;
  rep.field = F->params();
  rep.p = p;
  rep.cap = cap;
  rep.vdim = vdim;
  std::vector<int> S;
  for (int m = 2; m <= cap; ++m)
    if (std::gcd(m, p) == 1) S.push_back(m);
  std::map<int, NaturalTransform> thetas;
  for (int m : S) thetas.emplace(m, theta(F, F->primitive_root(m), cap));
  auto above = [&](int bound) {
    std::vector<int> out;
    for (int m : S)
      if (m > bound) out.push_back(m);
    return out;
  };
  NaturalTransform id = identity_transform(F, cap);
  NaturalTransform chi = antipode_transform(F, cap);

  Chain c0 = chain(id, S, thetas, coalgebra_degree);
  rep.blocks.push_back({1, c0.r, c0.log});
  int prev = 1;
  Chain less = c0;  // retraction onto the blocks below the current one
  for (int m : S) {
    if (prev != 1) less = chain(id, above(prev), thetas, coalgebra_degree);
    // (chi o e) * id projects onto the complementary factor
    NaturalTransform proj = conv(compose(chi, less.r), id);
    proj.is_coalgebra_map = true;
    std::vector<std::uint64_t> k;
    NaturalTransform rho = eventual(proj, k);
    BlockEntry b{m, {}, {}};
    b.stages.push_back(log_stage("complement", 0, proj, rho, k, coalgebra_degree));
    Chain c = chain(rho, above(m), thetas, coalgebra_degree);
    b.stages.insert(b.stages.end(), c.log.begin(), c.log.end());
    b.idempotent = c.r;
    rep.blocks.push_back(std::move(b));
    prev = m;
  }

  for (const auto& b : rep.blocks)
    for (const auto& s : b.stages) {
      rep.idempotents_exact &= s.idempotent && s.commutes;
      rep.coalgebra_compatible &= s.coalgebra;
    }
  for (int n = 1; n <= cap; ++n) {
    Subspace P = primitives(n, vdim, F);
    int u = n;
    while (u % p == 0) u /= p;
    std::size_t total = 0;
    for (const auto& b : rep.blocks) {
      Matrix op = as_operator(b.idempotent, n, vdim);  // columns are images
      Subspace im = Subspace::span(*F, transpose(op));
      PrimitiveVerdict v{n, b.m, intersect(*F, P, im).dim(), P.dim(), b.m == u};
      total += v.dim;
      rep.verdicts_hold &= v.claims ? v.dim == v.primitives : v.dim == 0;
      rep.verdicts.push_back(v);
    }
    rep.verdicts_hold &= total == P.dim();
  }
  return rep;
}

std::pair<Subspace, Subspace> multilinear_generated(const std::vector<int>& gens, int q, const Field& f) {
  if (q < 1 || q > 7) throw Error(ErrorKind::CapExceeded, "multilinear parts need 1 <= q <= 7");
  FieldPtr fp = field_ptr(f.params());
  std::size_t N = factorial(q);
  std::vector<int> sizes;
  for (int g : gens)
    if (g >= 1 && g <= q) sizes.push_back(g);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  // multilinear Lie basis on the letters of a block, as sparse tensors over q letters
  auto lie_on = [&](const std::vector<int>& letters) {
    std::vector<Tensor> out;
    std::vector<int> rest(letters.begin() + 1, letters.end());
    do {
      Word w{std::uint8_t(letters[0])};
      for (int l : rest) w.push_back(std::uint8_t(l));
      out.push_back(left_normed(Tensor::word(fp, q, w)));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
  };
  auto coords = [&](const Tensor& t) {
    std::vector<Scalar> v(N);
    for (const auto& [w, c] : t.terms) {
      Perm s(q);
      for (int i = 0; i < q; ++i) s[i] = std::uint8_t(w[i] - 1);
      v[perm_rank(s)] = c;
    }
    return v;
  };
  SpanBuilder all(N), dec(N);
  std::function<void(std::uint32_t, const Tensor&, int)> rec = [&](std::uint32_t used, const Tensor& acc, int blocks) {
    if (used == (1u << q) - 1) {
      auto v = coords(acc);
      all.add(f, v);
      if (blocks >= 2) dec.add(f, v);
      return;
    }
    std::vector<int> free;
    for (int i = 0; i < q; ++i)
      if (!(used >> i & 1)) free.push_back(i + 1);
    int r = int(free.size());
    for (int sz : sizes) {
      if (sz > r) break;
      // subsets of the free letters of size sz
      std::vector<int> pick(r, 0);
      std::fill(pick.end() - sz, pick.end(), 1);
      do {
        std::vector<int> letters;
        std::uint32_t mask = used;
        for (int i = 0; i < r; ++i)
          if (pick[i]) {
            letters.push_back(free[i]);
            mask |= 1u << (free[i] - 1);
          }
        for (const auto& L : lie_on(letters)) rec(mask, concat(acc, L), blocks + 1);
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
  };
  rec(0, Tensor::unit(fp, q), 0);
  return {all.finish(f), dec.finish(f)};
}

SplitnessReport splitness_check(const std::vector<int>& gens, int cap, int m, FieldPtr fp, int jobs) {
  const Field& f = *fp;
  SplitnessReport rep;
  rep.gens = gens;
  std::sort(rep.gens.begin(), rep.gens.end());
  rep.gens.erase(std::unique(rep.gens.begin(), rep.gens.end()), rep.gens.end());
  rep.cap = cap;
  rep.m = m;
  rep.p = f.p();
  Graded B = subhopf_evaluate(rep.gens, cap, m, fp);
  for (const auto& s : B) rep.b_dims.push_back(std::int64_t(s.dim()));
  rep.degrees.resize(cap);
  auto one_degree = [&](int q) {
    SplitDegree& d = rep.degrees[q - 1];
    d.q = q;
    d.q_dim = q_n_indecomposables(B, q, m, f).dim;
    if (std::find(rep.gens.begin(), rep.gens.end(), q) == rep.gens.end()) {
      d.certified = d.projective = true;
      d.certificate = "no generator in this degree";
    } else if (q > 7) {
      d.certificate = "uncertified: gamma side limited to degree 7";
    } else {
      auto [all, dec] = multilinear_generated(rep.gens, q, f);
      SigmaModule Q = quotient_module(regular_module(fp, q), all, dec);
      d.gamma_dim = Q.dim;
      if (Q.dim > 1000) {
        d.certificate = "uncertified: gamma module of dimension " + std::to_string(Q.dim);
      } else {
        auto pr = is_projective(Q);
        d.certified = true;
        d.projective = pr.projective;
        d.certificate = pr.certificate;
      }
    }
  };
  std::atomic<int> next{1};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (int q; (q = next++) <= cap;) {
      try {
        one_degree(q);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::min(jobs, cap); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  for (const auto& d : rep.degrees) {
    rep.certified &= d.certified;
    rep.verdict &= d.certified && d.projective;
  }
  return rep;
}

Theorem11Report theorem_1_1_report(int p, const std::vector<int>& M, const std::vector<int>& f, int cap, int m,
                                   int jobs) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, "p must be prime");
  Theorem11Report rep;
  rep.p = p;
  rep.M = M;
  rep.f = f;
  rep.degrees = generated_degrees(p, M, f, cap);
  rep.split = splitness_check(rep.degrees, cap, m, field_ptr(p, 1), jobs);
  rep.d_dims = hilbert_series_d_dims(rep.split.b_dims, cap);
  return rep;
}

}  // namespace liesplit
