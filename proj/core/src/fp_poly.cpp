#include "fp_poly.hpp"

#include <cassert>

namespace howe::detail::fp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  // extended Euclid on signed 128-bit values
  i128 t = 0, new_t = 1;
  i128 r = p, new_r = a % p;
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  assert(r == 1);
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = fp::add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = fp::sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fp::add(r[i + j], fp::mul(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
  assert(!b.empty());
  r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  const u64 lead_inv = inv(b.back(), p);
  for (int i = degree(r); i >= db; --i) {
    u64 c = mul(r[i], lead_inv, p);
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = fp::sub(r[i - db + j], mul(c, b[j], p), p);
  }
  trim(q);
  trim(r);
}

Poly mod(Poly a, const Poly& m, u64 p) {
  Poly q, r;
  divmod(a, m, p, q, r);
  return r;
}

Poly monic(Poly a, u64 p) {
  trim(a);
  if (a.empty()) return a;
  u64 li = inv(a.back(), p);
  for (auto& c : a) c = mul(c, li, p);
  return a;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

Poly inv_mod(const Poly& a, const Poly& m, u64 p) {
  // extended Euclid tracking only the coefficient of a
  Poly r0 = m, r1 = mod(a, m, p);
  Poly s0, s1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, p, q, r);
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  assert(r0.size() == 1);
  u64 c = inv(r0[0], p);
  for (auto& v : s0) v = mul(v, c, p);
  return mod(s0, m, p);
}

Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& m, u64 p) {
  Poly result{1};
  result = mod(result, m, p);
  Poly b = mod(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, b, p), m, p);
  }
  return result;
}

namespace {
std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}
}  // namespace

bool is_irreducible(const Poly& m, u64 p) {
  const int k = degree(m);
  if (k < 1) return false;
  if (k == 1) return true;
  const Poly x{0, 1};
  const mpz_class pz(static_cast<unsigned long>(p));
  // x^{p^k} == x (mod m)
  mpz_class pk;
  mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(k));
  if (sub(pow_mod(x, pk, m, p), mod(x, m, p), p) != Poly{}) return false;
  for (int r : prime_divisors(k)) {
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), pz.get_mpz_t(), static_cast<unsigned long>(k / r));
    Poly h = sub(pow_mod(x, e, m, p), x, p);
    if (degree(gcd(h, m, p)) != 0) return false;
  }
  return true;
}

Poly random_monic(int degree, u64 p, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, p - 1);
  Poly r(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) r[i] = dist(rng);
  r[degree] = 1;
  return r;
}

}  // namespace howe::detail::fp
