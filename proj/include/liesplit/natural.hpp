#pragma once

#include <cstdint>
#include <vector>

#include "liesplit/group_algebra.hpp"
#include "liesplit/linalg.hpp"
#include "liesplit/tensor.hpp"

namespace liesplit {

// Graded family of group algebra elements, one per degree 0..cap.
struct NaturalTransform {
  FieldPtr field;
  int cap = 0;
  std::vector<GroupAlgebraElement> components;
  bool is_coalgebra_map = false;

  const GroupAlgebraElement& operator[](int n) const { return components.at(n); }
  friend bool operator==(const NaturalTransform& a, const NaturalTransform& b) {
    return a.cap == b.cap && a.components == b.components;
  }
};

NaturalTransform identity_transform(FieldPtr f, int cap);
NaturalTransform unit_counit_transform(FieldPtr f, int cap);
NaturalTransform antipode_transform(FieldPtr f, int cap);
NaturalTransform lambda_transform(FieldPtr f, Scalar zeta, int cap);

NaturalTransform conv(const NaturalTransform& f, const NaturalTransform& g);
// apply(compose(f, g), t) == apply(f, apply(g, t))
NaturalTransform compose(const NaturalTransform& f, const NaturalTransform& g);
NaturalTransform theta(FieldPtr f, Scalar zeta, int cap);

Tensor apply(const NaturalTransform& f, const Tensor& t);
// psi f = (f x f) psi, checked on the generic multilinear word of each degree
bool check_coalgebra_map(const NaturalTransform& f, int max_degree = 6);

struct EventualIdempotent {
  GroupAlgebraElement e;
  std::uint64_t k = 1;       // e = a^k, least such exponent
  std::uint64_t index = 1;   // first power lying in the cyclic part
  std::uint64_t period = 1;  // length of the cycle
};
EventualIdempotent eventual_idempotent(const GroupAlgebraElement& a);
NaturalTransform eventual_idempotent(const NaturalTransform& a);

// m^n x m^n matrix acting on column vectors of dense T_n(V) coordinates
Matrix as_operator(const NaturalTransform& f, int n, int m);
Matrix as_operator(const GroupAlgebraElement& g, int m);
// matrix of x -> g * x on k(Sigma_n), column convention
Matrix left_regular(const GroupAlgebraElement& g);

}  // namespace liesplit
