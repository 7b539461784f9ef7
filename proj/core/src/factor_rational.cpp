#include <algorithm>
#include <cmath>

#include "howe/unipoly.hpp"

namespace howe {

namespace {

using ZPoly = std::vector<mpz_class>;

// f = c * P with P integral, primitive, positive leading coefficient.
mpq_class split_content(const UniPoly& f, ZPoly& prim) {
  mpz_class den = 1, num = 0;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  prim.clear();
  for (const auto& c : f.coeffs()) {
    mpz_class v = c.rational().get_num() * (den / c.rational().get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    prim.push_back(v);
  }
  if (prim.back() < 0) num = -num;
  for (auto& v : prim) v /= num;
  mpq_class c(num, den);
  c.canonicalize();
  return c;
}

UniPoly to_q(const Field& q, const ZPoly& a) {
  std::vector<FieldElement> c;
  for (const auto& v : a) c.push_back(q.from_mpz(v));
  return UniPoly(q, std::move(c));
}

UniPoly to_p(const Field& fp, const ZPoly& a) {
  std::vector<FieldElement> c;
  for (const auto& v : a) c.push_back(fp.from_mpz(v));
  return UniPoly(fp, std::move(c));
}

ZPoly symmetric_lift(const UniPoly& f, std::uint64_t p) {
  const mpz_class pz(static_cast<unsigned long>(p));
  const mpz_class half = pz / 2;
  ZPoly out;
  for (const auto& c : f.coeffs()) {
    mpz_class v(static_cast<unsigned long>(c.value()));
    if (v > half) v -= pz;
    out.push_back(v);
  }
  return out;
}

ZPoly primitive(ZPoly a) {
  mpz_class g = 0;
  for (const auto& v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& v : a) v /= g;
  return a;
}

// Exact division test over Z via Q.
bool divides(const Field& q, const ZPoly& d, const ZPoly& n, ZPoly& quotient) {
  auto [quo, rem] = divmod(to_q(q, n), to_q(q, d));
  if (!rem.is_zero()) return false;
  quotient.clear();
  for (const auto& c : quo.coeffs()) {
    if (c.rational().get_den() != 1) return false;
    quotient.push_back(c.rational().get_num());
  }
  return true;
}

std::uint64_t choose_prime(const ZPoly& g, std::uint64_t start) {
  for (std::uint64_t p = start;; p -= 2) {
    if (!is_prime(p)) continue;
    const mpz_class pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(g.back().get_mpz_t(), pz.get_mpz_t())) continue;
    Field fp = Field::prime(p);
    UniPoly gp = to_p(fp, g);
    if (gcd(gp, derivative(gp)).degree() == 0) return p;
  }
}

// Irreducible factors of a squarefree primitive integer polynomial.
std::vector<ZPoly> factor_squarefree(const Field& q, const ZPoly& g) {
  const int n = static_cast<int>(g.size()) - 1;
  if (n <= 1) return {g};
  // Mignotte: every factor has coefficients bounded by |lc| * 2^n * ||g||_2.
  mpz_class norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class bound = abs(g.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  const std::uint64_t start = (std::uint64_t{1} << 62) - 57;  // odd
  if (2 * bound >= mpz_class(static_cast<unsigned long>(start) - 1000000UL))
    throw Unsupported("coefficient bound exceeds the 62-bit modular factorization range");
  const std::uint64_t p = choose_prime(g, start);
  const Field fp = Field::prime(p);
  std::vector<UniPoly> mods;
  for (const auto& pf : factor_finite(to_p(fp, g), p)) mods.push_back(pf.factor);
  if (mods.size() == 1) return {g};

  std::vector<ZPoly> out;
  ZPoly rest = g;
  std::size_t s = 1;
  while (2 * s <= mods.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      UniPoly prod = UniPoly::constant(fp.from_mpz(rest.back()));
      for (auto i : idx) prod *= mods[i];
      ZPoly cand = primitive(symmetric_lift(prod, p));
      ZPoly quotient;
      if (divides(q, cand, rest, quotient)) {
        out.push_back(cand);
        rest = quotient;
        for (std::size_t i = s; i-- > 0;) mods.erase(mods.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        found = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == mods.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  out.push_back(primitive(rest));
  return out;
}

bool zless(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

RationalFactorization factor_rational(const UniPoly& f) {
  const Field& q = f.field();
  if (q.kind() != FieldKind::rational) throw Unsupported("factor_rational needs a polynomial over Q");
  if (f.is_zero()) throw ZeroPolynomial("factorization of zero");
  RationalFactorization out{f.leading().rational(), {}};
  if (f.degree() == 0) return out;

  struct Item {
    ZPoly poly;
    int multiplicity;
  };
  std::vector<Item> items;
  for (const auto& sf : squarefree_decomposition(f)) {
    ZPoly g;
    split_content(sf.factor, g);
    for (auto& z : factor_squarefree(q, g)) items.push_back({std::move(z), sf.multiplicity});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return zless(a.poly, b.poly); });

  mpq_class lc_prod = 1;
  for (auto& it : items) {
    mpz_class l;
    mpz_pow_ui(l.get_mpz_t(), it.poly.back().get_mpz_t(), static_cast<unsigned long>(it.multiplicity));
    lc_prod *= l;
    out.factors.push_back({to_q(q, it.poly), it.multiplicity});
  }
  out.content = f.leading().rational() / lc_prod;
  out.content.canonicalize();
  return out;
}

}  // namespace howe
