#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liesplit/field.hpp"

namespace liesplit {

struct BasicProduct {
  int letter = -1;          // 1-based letter for weight 1, else -1
  int left = -1, right = -1;  // indices into the enumerated list
  int weight = 1;
  int rank = 0;
  int serial = 0;           // 1-based position in the enumerated order
  int d = 0;                // sum of letter degrees
  std::vector<int> flat;    // letters in bracket order
  std::vector<int> letter_counts;
  std::string expr;
};

// letter_degrees non-decreasing; products with d > d_cap are omitted. Order:
// weight, then the flattened letter sequence, then the left factor.
std::vector<BasicProduct> basic_products(const std::vector<int>& letter_degrees, int d_cap);

std::int64_t mobius(std::int64_t n);
// number of basic products with the given letter counts
std::int64_t multiplicity(const std::vector<int>& letter_counts);

// d_n from B(t) = 1 / (1 - sum d_n t^n)
std::vector<std::int64_t> hilbert_series_d_dims(const std::vector<std::int64_t>& b_dims, int cap);
// inverse: B dims from generator dims
std::vector<std::int64_t> hilbert_series_b_dims(const std::vector<std::int64_t>& d_dims, int cap);

// f_i = -1 means no bound on r
std::vector<int> generated_degrees(int p, const std::vector<int>& M, const std::vector<int>& f, int cap);
// every m > 1 prime to p with m <= cap, unbounded p-powers
std::vector<int> all_coprime(int p, int cap);

struct Theorem61Term {
  std::string expr;
  int weight = 0;
  int d = 0;
  int lie_degree = 0;  // target / d
  std::int64_t dim = 0;
  std::vector<int> letter_counts;
};

struct Theorem61Letter {
  int degree = 0;
  std::int64_t dim = 0;
  std::int64_t recursive_dim = 0;  // from the identity itself, for comparison
  bool from_algebra = false;       // dim came from the generated algebra
};

struct Theorem61Report {
  int p = 0, target = 0, vdim = 0;
  std::vector<Theorem61Letter> letters;
  std::vector<Theorem61Term> terms;
  std::int64_t lie_dim = 0, sum = 0;
  bool dims_hold = false;
  bool multiplicities_hold = false;
  std::vector<std::string> flags;
  bool explicit_mode = false;
  bool direct_sum = false;
  std::vector<std::size_t> explicit_dims;
  bool holds = false;
};

enum class HiltonMode { Dims, Explicit };
Theorem61Report verify_theorem61(const std::vector<int>& letter_degrees, int target, int vdim, int p,
                                 HiltonMode mode);

}  // namespace liesplit
