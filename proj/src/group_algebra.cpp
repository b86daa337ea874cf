#include "liesplit/group_algebra.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "liesplit/error.hpp"

namespace liesplit {

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= std::uint64_t(i);
  return r;
}

const std::vector<Perm>& all_perms(int n) {
  if (n < 0 || n > kMaxGroupDegree) throw Error(ErrorKind::DegreeOutOfCap, "degree " + std::to_string(n));
  static std::array<std::vector<Perm>, kMaxGroupDegree + 1> cache;
  static std::once_flag flags[kMaxGroupDegree + 1];
  std::call_once(flags[n], [n] {
    Perm s(n);
    std::iota(s.begin(), s.end(), 0);
    do cache[n].push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
  });
  return cache[n];
}

std::size_t perm_rank(const Perm& s) {
  int n = int(s.size());
  std::size_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (s[j] < s[i]) ++smaller;
    r = r * std::size_t(n - i) + std::size_t(smaller);
  }
  return r;
}

Perm identity_perm(int n) {
  Perm s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Perm inverse_perm(const Perm& s) {
  Perm t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[s[i]] = std::uint8_t(i);
  return t;
}

Perm star(const Perm& s, const Perm& t) {
  Perm r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = t[s[i]];
  return r;
}

Perm adjacent(int n, int i) {
  Perm s = identity_perm(n);
  std::swap(s[i], s[i + 1]);
  return s;
}

std::vector<int> reduced_word(const Perm& s) {
  // a_i * t is t with positions i, i+1 swapped, so bubble sorting the image
  // sequence peels generators off the left.
  Perm t = s;
  std::vector<int> word;
  int n = int(s.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i)
      if (t[i] > t[i + 1]) {
        std::swap(t[i], t[i + 1]);
        word.push_back(i);
        changed = true;
      }
  }
  return word;
}

const std::vector<std::uint16_t>& star_table(int n) {
  if (n < 0 || n > 7) throw Error(ErrorKind::DegreeOutOfCap, "product table needs n <= 7");
  static std::array<std::vector<std::uint16_t>, 8> cache;
  static std::once_flag flags[8];
  std::call_once(flags[n], [n] {
    const auto& ps = all_perms(n);
    std::size_t N = ps.size();
    cache[n].resize(N * N);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) cache[n][a * N + b] = std::uint16_t(perm_rank(star(ps[a], ps[b])));
  });
  return cache[n];
}

GroupAlgebraElement::GroupAlgebraElement(FieldPtr f, int deg) : field(std::move(f)), n(deg) {
  coeffs.assign(factorial(deg), Scalar{0});
}

GroupAlgebraElement GroupAlgebraElement::identity(FieldPtr f, int deg) {
  GroupAlgebraElement a(std::move(f), deg);
  a.coeffs[0] = {1};
  return a;
}

GroupAlgebraElement GroupAlgebraElement::basis(FieldPtr f, const Perm& s) {
  GroupAlgebraElement a(std::move(f), int(s.size()));
  a.coeffs[perm_rank(s)] = {1};
  return a;
}

bool GroupAlgebraElement::is_zero() const {
  for (Scalar s : coeffs)
    if (s.v) return false;
  return true;
}

std::size_t GroupAlgebraElement::support_size() const {
  std::size_t k = 0;
  for (Scalar s : coeffs)
    if (s.v) ++k;
  return k;
}

static void check_same(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.n != b.n) throw Error(ErrorKind::DegreeMismatch, "group algebra degrees differ");
  if (!(a.field->params() == b.field->params())) throw Error(ErrorKind::FieldMismatch, "group algebra fields differ");
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same(a, b);
  GroupAlgebraElement r = a;
  a.field->axpy(r.coeffs.data(), a.field->one(), b.coeffs.data(), r.coeffs.size());
  return r;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same(a, b);
  GroupAlgebraElement r = a;
  a.field->axpy(r.coeffs.data(), a.field->neg(a.field->one()), b.coeffs.data(), r.coeffs.size());
  return r;
}

GroupAlgebraElement scale(Scalar c, const GroupAlgebraElement& a) {
  GroupAlgebraElement r = a;
  a.field->scale(r.coeffs.data(), c, r.coeffs.size());
  return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same(a, b);
  const Field& f = *a.field;
  GroupAlgebraElement r(a.field, a.n);
  std::size_t N = a.coeffs.size();
  std::vector<std::size_t> bs;
  for (std::size_t j = 0; j < N; ++j)
    if (b.coeffs[j].v) bs.push_back(j);
  if (a.n <= 7) {
    const auto& tab = star_table(a.n);
    for (std::size_t i = 0; i < N; ++i) {
      Scalar ai = a.coeffs[i];
      if (!ai.v) continue;
      const std::uint16_t* row = &tab[i * N];
      for (std::size_t j : bs) r.coeffs[row[j]] = f.add(r.coeffs[row[j]], f.mul(ai, b.coeffs[j]));
    }
  } else {
    const auto& ps = all_perms(a.n);
    for (std::size_t i = 0; i < N; ++i) {
      Scalar ai = a.coeffs[i];
      if (!ai.v) continue;
      for (std::size_t j : bs) {
        std::size_t k = perm_rank(star(ps[i], ps[j]));
        r.coeffs[k] = f.add(r.coeffs[k], f.mul(ai, b.coeffs[j]));
      }
    }
  }
  return r;
}

GroupAlgebraElement power(const GroupAlgebraElement& a, std::uint64_t k) {
  GroupAlgebraElement r = GroupAlgebraElement::identity(a.field, a.n), b = a;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

}  // namespace liesplit
