#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liesplit/functors.hpp"
#include "liesplit/natural.hpp"
#include "liesplit/sigma_module.hpp"

namespace liesplit {

struct EventualImage {
  NaturalTransform idempotent;
  std::vector<EventualIdempotent> per_degree;
  std::vector<Subspace> images;  // e * k(Sigma_n), permutation-rank coordinates
};
EventualImage eventual_image_chain(const NaturalTransform& f);

struct StageLog {
  std::string label;
  int m = 0;                       // root order used, 0 for the complement step
  std::vector<std::uint64_t> k;    // exponent of the eventual idempotent per degree
  bool idempotent = false;
  bool commutes = false;
  bool coalgebra = false;          // checked through degree min(cap, 5)
};

struct BlockEntry {
  int m = 1;
  NaturalTransform idempotent;
  std::vector<StageLog> stages;
};

struct PrimitiveVerdict {
  int n = 0;
  int block = 0;
  std::size_t dim = 0;
  std::size_t primitives = 0;
  bool claims = false;  // n = block * p^r
};

struct BlockReport {
  FieldParams field;
  int p = 0, cap = 0, vdim = 2;
  std::vector<BlockEntry> blocks;
  std::vector<PrimitiveVerdict> verdicts;
  bool idempotents_exact = true;
  bool coalgebra_compatible = true;
  bool verdicts_hold = true;
};
// field degree lcm ord_m(p) over the coprime m <= cap; CapExceeded above 8
int block_field_degree(int p, int cap);
BlockReport block_decomposition(int p, int cap, int vdim = 2, int coalgebra_degree = 5);

struct SplitDegree {
  int q = 0;
  std::size_t q_dim = 0;      // dim Q_qB(V)
  std::size_t gamma_dim = 0;  // dim gamma_q(Q_qB)
  bool certified = false;
  bool projective = false;
  std::string certificate;
};
struct SplitnessReport {
  std::vector<int> gens;
  int cap = 0, m = 0, p = 0;
  std::vector<std::int64_t> b_dims;
  std::vector<SplitDegree> degrees;
  bool certified = true;
  bool verdict = true;
};
// gamma_q of the generated algebra and of its decomposables, multilinear coordinates
std::pair<Subspace, Subspace> multilinear_generated(const std::vector<int>& gens, int q, const Field& f);
// per-degree work runs on up to `jobs` threads; the report does not depend on it
SplitnessReport splitness_check(const std::vector<int>& gens, int cap, int m, FieldPtr f, int jobs = 1);

struct Theorem11Report {
  int p = 0;
  std::vector<int> M, f;
  std::vector<int> degrees;
  SplitnessReport split;
  std::vector<std::int64_t> d_dims;
};
Theorem11Report theorem_1_1_report(int p, const std::vector<int>& M, const std::vector<int>& f, int cap, int m,
                                   int jobs = 1);

}  // namespace liesplit
