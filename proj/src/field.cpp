#include "liesplit/field.hpp"

#include <map>
#include <mutex>

#include "liesplit/error.hpp"

namespace liesplit {

namespace {

using Poly = std::vector<long long>;  // coefficients mod p, constant first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long long modinv(long long a, long long p) {
  long long r = 1, b = a % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

Poly pmod(Poly a, const Poly& f, long long p) {
  trim(a);
  int df = int(f.size()) - 1;
  long long lead_inv = modinv(f.back(), p);
  while (int(a.size()) - 1 >= df) {
    long long c = a.back() * lead_inv % p;
    int sh = int(a.size()) - 1 - df;
    for (int i = 0; i <= df; ++i) a[sh + i] = ((a[sh + i] - c * f[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pmod(r, f, p);
}

Poly ppowmod(Poly b, unsigned long long k, const Poly& f, long long p) {
  Poly r{1};
  b = pmod(b, f, p);
  while (k) {
    if (k & 1) r = pmulmod(r, b, f, p);
    b = pmulmod(b, b, f, p);
    k >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, long long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

std::vector<long long> prime_factors(unsigned long long n) {
  std::vector<long long> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back((long long)d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back((long long)n);
  return out;
}

// Rabin's test
bool irreducible(const Poly& f, long long p) {
  int e = int(f.size()) - 1;
  if (e == 1) return true;
  Poly x{0, 1};
  Poly xq = x;
  std::vector<Poly> powers(e + 1);
  powers[0] = x;
  for (int k = 1; k <= e; ++k) {
    xq = ppowmod(xq, (unsigned long long)p, f, p);
    powers[k] = xq;
  }
  Poly d = powers[e];
  d.resize(std::max<std::size_t>(d.size(), 2), 0);
  d[1] = (d[1] - 1 + p) % p;
  trim(d);
  if (!d.empty()) return false;
  for (long long r : prime_factors(e)) {
    Poly g = powers[e / r];
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] - 1 + p) % p;
    Poly h = pgcd(f, g, p);
    if (h.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldParams make_field(int p, int e) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, "p=" + std::to_string(p));
  if (e < 1 || e > 8) throw Error(ErrorKind::DegreeOutOfRange, "e=" + std::to_string(e));
  unsigned long long count = 1;
  for (int i = 0; i < e; ++i) count *= (unsigned long long)p;
  for (unsigned long long code = 0; code < count; ++code) {
    Poly f(e + 1, 0);
    unsigned long long c = code;
    for (int i = 0; i < e; ++i) {
      f[i] = (long long)(c % p);
      c /= p;
    }
    f[e] = 1;
    if (irreducible(f, p)) {
      FieldParams out{p, e, {}};
      for (long long v : f) out.modulus.push_back(int(v));
      return out;
    }
  }
  throw Error(ErrorKind::DegreeOutOfRange, "no irreducible polynomial found");
}

int minimal_extension_degree(int p, int m) {
  if (m <= 1) return 1;
  long long r = p % m;
  int e = 1;
  while (r != 1 % m) {
    r = r * p % m;
    ++e;
    if (e > m) throw Error(ErrorKind::OrderUnavailable, "p and m not coprime");
  }
  return e;
}

Field::Field(FieldParams params) : params_(std::move(params)) {
  if (!is_prime(params_.p)) throw Error(ErrorKind::NonPrime, "p=" + std::to_string(params_.p));
  if (params_.e < 1 || params_.e > 8) throw Error(ErrorKind::DegreeOutOfRange, "e");
  q_ = 1;
  for (int i = 0; i < params_.e; ++i) q_ *= std::uint64_t(params_.p);
  p2_ = params_.p == 2;
  prime_ = params_.e == 1;
  if (q_ <= 256) {
    mul_tab_.assign(q_ * q_, 0);
    if (!p2_ && !prime_) add_tab_.assign(q_ * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        mul_tab_[a * q_ + b] = std::uint16_t(mul_slow({a}, {b}).v);
        if (!add_tab_.empty()) add_tab_[a * q_ + b] = std::uint16_t(add_slow({a}, {b}).v);
      }
  }
  if (q_ <= (1u << 20)) {
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      std::vector<int> c = coeffs({a});
      for (int& d : c) d = (params_.p - d) % params_.p;
      neg_[a] = from_coeffs(c).v;
    }
  }
  // generator of the multiplicative group
  auto fac = prime_factors(q_ - 1);
  gen_ = {1};
  if (q_ > 2) {
    for (std::uint32_t g = 2; g < q_; ++g) {
      bool ok = true;
      for (long long r : fac)
        if (pow({g}, (q_ - 1) / r) == one()) {
          ok = false;
          break;
        }
      if (ok) {
        gen_ = {g};
        break;
      }
    }
  }
  if (mul_tab_.empty() && !prime_ && q_ <= (1u << 20)) {
    log_.assign(q_, 0);
    exp_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      exp_[k] = cur;
      log_[cur] = k;
      cur = mul_slow({cur}, gen_).v;
    }
  }
}

Scalar Field::from_int(long n) const {
  long r = n % params_.p;
  if (r < 0) r += params_.p;
  return {std::uint32_t(r)};
}

Scalar Field::from_coeffs(const std::vector<int>& c) const {
  std::uint64_t v = 0, w = 1;
  for (int i = 0; i < params_.e; ++i) {
    long d = i < int(c.size()) ? c[i] % params_.p : 0;
    if (d < 0) d += params_.p;
    v += std::uint64_t(d) * w;
    w *= std::uint64_t(params_.p);
  }
  return {std::uint32_t(v)};
}

std::vector<int> Field::coeffs(Scalar a) const {
  std::vector<int> c(params_.e);
  std::uint64_t v = a.v;
  for (int i = 0; i < params_.e; ++i) {
    c[i] = int(v % params_.p);
    v /= params_.p;
  }
  return c;
}

Scalar Field::x() const {
  if (params_.e == 1) return from_int(-params_.modulus[0]);
  return {std::uint32_t(params_.p)};
}

Scalar Field::neg(Scalar a) const {
  if (p2_) return a;
  if (prime_) return {a.v == 0 ? 0 : std::uint32_t(q_ - a.v)};
  if (!neg_.empty()) return {neg_[a.v]};
  std::vector<int> c = coeffs(a);
  for (int& d : c) d = (params_.p - d) % params_.p;
  return from_coeffs(c);
}

Scalar Field::add_slow(Scalar a, Scalar b) const {
  std::vector<int> ca = coeffs(a), cb = coeffs(b);
  for (int i = 0; i < params_.e; ++i) ca[i] = (ca[i] + cb[i]) % params_.p;
  return from_coeffs(ca);
}

Scalar Field::mul_slow(Scalar a, Scalar b) const {
  if (prime_) return {std::uint32_t(std::uint64_t(a.v) * b.v % q_)};
  std::vector<int> ca = coeffs(a), cb = coeffs(b);
  Poly pa(ca.begin(), ca.end()), pb(cb.begin(), cb.end());
  Poly f(params_.modulus.begin(), params_.modulus.end());
  trim(pa);
  trim(pb);
  Poly r = pmulmod(pa, pb, f, params_.p);
  std::vector<int> out(params_.e, 0);
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = int(r[i]);
  return from_coeffs(out);
}

Scalar Field::pow(Scalar a, std::uint64_t k) const {
  Scalar r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Scalar Field::inv(Scalar a) const {
  if (a.v == 0) throw std::domain_error("division by zero in GF(q)");
  if (!log_.empty()) return {exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
  return pow(a, q_ - 2);
}

Scalar Field::primitive_root(int m) const {
  if (m < 1 || (q_ - 1) % std::uint64_t(m) != 0)
    throw Error(ErrorKind::OrderUnavailable, "m=" + std::to_string(m) + " does not divide q-1");
  if (m == 1) return one();
  auto fac = prime_factors(std::uint64_t(m));
  for (std::uint32_t z = 1; z < q_; ++z) {
    if (pow({z}, std::uint64_t(m)) != one()) continue;
    bool ok = true;
    for (long long r : fac)
      if (pow({z}, std::uint64_t(m / r)) == one()) ok = false;
    if (ok) return {z};
  }
  throw Error(ErrorKind::OrderUnavailable, "no root found");
}

void Field::axpy(Scalar* y, Scalar c, const Scalar* x, std::size_t n) const {
  if (c.v == 0) return;
  if (p2_ && c.v == 1) {
    auto* yy = reinterpret_cast<std::uint32_t*>(y);
    auto* xx = reinterpret_cast<const std::uint32_t*>(x);
    for (std::size_t i = 0; i < n; ++i) yy[i] ^= xx[i];
    return;
  }
  if (!mul_tab_.empty()) {
    const std::uint16_t* row = &mul_tab_[c.v * q_];
    if (p2_) {
      for (std::size_t i = 0; i < n; ++i) y[i].v ^= row[x[i].v];
    } else if (prime_) {
      std::uint32_t q = std::uint32_t(q_);
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t s = y[i].v + row[x[i].v];
        y[i].v = s >= q ? s - q : s;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) y[i].v = add_tab_[y[i].v * q_ + row[x[i].v]];
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (x[i].v) y[i] = add(y[i], mul(c, x[i]));
}

void Field::scale(Scalar* y, Scalar c, std::size_t n) const {
  for (std::size_t i = 0; i < n; ++i) y[i] = mul(c, y[i]);
}

FieldPtr field_ptr(const FieldParams& params) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(params.p, params.e);
  auto it = cache.find(key);
  if (it != cache.end() && it->second->params() == params) return it->second;
  auto f = std::make_shared<const Field>(params);
  if (it == cache.end()) cache.emplace(key, f);
  return f;
}

FieldPtr field_ptr(int p, int e) { return field_ptr(make_field(p, e)); }

Scalar primitive_root(const FieldParams& field, int m) { return field_ptr(field)->primitive_root(m); }

}  // namespace liesplit
