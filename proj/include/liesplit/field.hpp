#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace liesplit {

// Element of GF(p^e), stored as the base-p number whose digits are the
// power-basis coordinates (constant term least significant).
struct Scalar {
  std::uint32_t v = 0;
  friend bool operator==(Scalar a, Scalar b) { return a.v == b.v; }
  friend bool operator!=(Scalar a, Scalar b) { return a.v != b.v; }
  friend bool operator<(Scalar a, Scalar b) { return a.v < b.v; }
};

struct FieldParams {
  int p = 2;
  int e = 1;
  std::vector<int> modulus;  // monic, constant term first, length e+1
  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

bool is_prime(long n);
FieldParams make_field(int p, int e);
int minimal_extension_degree(int p, int m);

// Arithmetic context for one field. Immutable after construction.
class Field {
 public:
  explicit Field(FieldParams params);

  const FieldParams& params() const { return params_; }
  int p() const { return params_.p; }
  int e() const { return params_.e; }
  std::uint64_t size() const { return q_; }
  bool is_gf2() const { return params_.p == 2 && params_.e == 1; }

  Scalar zero() const { return {0}; }
  Scalar one() const { return {1}; }
  Scalar from_int(long n) const;
  Scalar from_coeffs(const std::vector<int>& c) const;
  std::vector<int> coeffs(Scalar a) const;
  Scalar x() const;  // class of the polynomial variable

  Scalar add(Scalar a, Scalar b) const {
    if (p2_) return {a.v ^ b.v};
    if (prime_) {
      std::uint64_t s = std::uint64_t(a.v) + b.v;
      return {std::uint32_t(s >= q_ ? s - q_ : s)};
    }
    if (!add_tab_.empty()) return {add_tab_[a.v * q_ + b.v]};
    return add_slow(a, b);
  }
  Scalar neg(Scalar a) const;
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const {
    if (!mul_tab_.empty()) return {mul_tab_[a.v * q_ + b.v]};
    if (a.v == 0 || b.v == 0) return {0};
    if (!log_.empty()) {
      std::uint32_t s = log_[a.v] + log_[b.v];
      if (s >= q_ - 1) s -= std::uint32_t(q_ - 1);
      return {exp_[s]};
    }
    return mul_slow(a, b);
  }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t k) const;

  // multiplicative generator of GF(q)^*
  Scalar generator() const { return gen_; }
  Scalar primitive_root(int m) const;

  // y += c*x over n entries
  void axpy(Scalar* y, Scalar c, const Scalar* x, std::size_t n) const;
  void scale(Scalar* y, Scalar c, std::size_t n) const;

 private:
  Scalar add_slow(Scalar a, Scalar b) const;
  Scalar mul_slow(Scalar a, Scalar b) const;

  FieldParams params_;
  std::uint64_t q_;
  bool p2_;
  bool prime_;
  Scalar gen_;
  std::vector<std::uint16_t> add_tab_, mul_tab_;
  std::vector<std::uint32_t> log_, exp_;
  std::vector<std::uint32_t> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;
FieldPtr field_ptr(int p, int e);
FieldPtr field_ptr(const FieldParams& params);

Scalar primitive_root(const FieldParams& field, int m);

}  // namespace liesplit
