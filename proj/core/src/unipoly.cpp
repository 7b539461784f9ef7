#include "howe/unipoly.hpp"

#include <algorithm>
#include <ostream>

namespace howe {

// ---------------------------------------------------------------- basics

UniPoly::UniPoly(Field field, std::vector<FieldElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.field() == field_)) throw MixedFields("coefficient from " + c.field().name() + " in polynomial over " + field_.name());
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const FieldElement& c, int degree) {
  std::vector<FieldElement> v(static_cast<std::size_t>(degree) + 1, c.field().zero());
  v[static_cast<std::size_t>(degree)] = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::from_ints(const Field& field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<FieldElement> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return UniPoly(field, std::move(v));
}

FieldElement UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return field_.zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

const FieldElement& UniPoly::leading() const {
  if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

FieldElement UniPoly::operator()(const FieldElement& at) const {
  FieldElement acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (!(field_ == o.field_)) throw MixedFields("polynomials over " + field_.name() + " and " + o.field_.name());
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (!(field_ == o.field_)) throw MixedFields("polynomials over " + field_.name() + " and " + o.field_.name());
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (!(field_ == o.field_)) throw MixedFields("polynomials over " + field_.name() + " and " + o.field_.name());
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<FieldElement> r(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const FieldElement& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(field_.one());
  UniPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

UniPoly UniPoly::shift(const FieldElement& a) const {
  // Horner in the ring: f(x + a) = (...(c_n (x+a) + c_{n-1})(x+a) + ...)
  const UniPoly lin(field_, {a, field_.one()});
  UniPoly acc(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lin;
    acc += constant(*it);
  }
  return acc;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = field_.kind() == FieldKind::rational && sgn(c.rational()) < 0;
    if (negative) cs = (-c).to_string();
    if (field_.kind() == FieldKind::extension && cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += std::string(var);
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& f) { return os << f.to_string(); }

// ---------------------------------------------------------------- division

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!(a.field() == b.field())) throw MixedFields("polynomials over " + a.field().name() + " and " + b.field().name());
  const Field& k = a.field();
  if (a.degree() < b.degree()) return {UniPoly(k), a};
  std::vector<FieldElement> r = a.coeffs();
  std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), k.zero());
  const FieldElement lead_inv = b.leading().inv();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    FieldElement c = r[static_cast<std::size_t>(i)] * lead_inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(k, std::move(q)), UniPoly(k, std::move(r))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quotient; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

UniPoly from_roots(const Field& field, std::span<const FieldElement> roots) {
  UniPoly acc = UniPoly::constant(field.one());
  for (const auto& r : roots) acc *= UniPoly(field, {-r, field.one()});
  return acc;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly derivative(const UniPoly& f) {
  if (f.degree() < 1) return UniPoly(f.field());
  std::vector<FieldElement> d;
  d.reserve(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) d.push_back(f.field().from_int(i) * f.coeffs()[static_cast<std::size_t>(i)]);
  return UniPoly(f.field(), std::move(d));
}

UniPoly pow_mod(const UniPoly& base, const mpz_class& e, const UniPoly& modulus) {
  UniPoly result = UniPoly::constant(base.field().one()) % modulus;
  UniPoly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

// ---------------------------------------------------------------- resultant

namespace {

using ZPoly = std::vector<mpz_class>;  // constant first, trimmed

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class zpow(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

mpq_class qpow(const mpq_class& b, unsigned long e) {
  return mpq_class(zpow(b.get_num(), e), zpow(b.get_den(), e));
}

// Splits a rational polynomial into its positive rational content and a
// primitive integer polynomial.
mpq_class primitive_part(const UniPoly& f, ZPoly& out) {
  mpz_class den = 1, num = 0;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  out.clear();
  for (const auto& c : f.coeffs()) {
    mpz_class v = c.rational().get_num() * (den / c.rational().get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  for (auto& v : out) v /= num;
  return mpq_class(num, den);
}

// prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const int db = zdeg(b);
  int e = zdeg(a) - db + 1;
  const mpz_class& lb = b.back();
  while (zdeg(a) >= db && !a.empty()) {
    const int shift = zdeg(a) - db;
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
    ztrim(a);
    --e;
  }
  if (e > 0) {
    mpz_class m = zpow(lb, static_cast<unsigned long>(e));
    for (auto& c : a) c *= m;
  }
  return a;
}

// Collins-Brown subresultant PRS (Cohen, Alg. 3.3.7) on primitive parts.
FieldElement resultant_rational(const UniPoly& f, const UniPoly& g) {
  const Field& k = f.field();
  ZPoly a, b;
  mpq_class ca = primitive_part(f, a);
  mpq_class cb = primitive_part(g, b);
  mpq_class t = qpow(ca, static_cast<unsigned long>(zdeg(b))) * qpow(cb, static_cast<unsigned long>(zdeg(a)));
  int s = 1;
  if (zdeg(a) < zdeg(b)) {
    std::swap(a, b);
    if ((zdeg(a) & 1) && (zdeg(b) & 1)) s = -1;
  }
  if (zdeg(b) == 0) {
    // Res(A, c) = c^deg A
    mpq_class r = t * qpow(mpq_class(b[0]), static_cast<unsigned long>(zdeg(a))) * s;
    return k.from_rational(r);
  }
  mpq_class g_ = 1, h = 1;
  for (;;) {
    const int delta = zdeg(a) - zdeg(b);
    if ((zdeg(a) & 1) && (zdeg(b) & 1)) s = -s;
    ZPoly r = pseudo_remainder(a, b);
    a = b;
    if (r.empty()) return k.zero();
    // b = r / (g * h^delta), exact over Z
    mpq_class div = g_ * qpow(h, static_cast<unsigned long>(delta));
    for (auto& c : r) {
      mpq_class q(c);
      q /= div;
      q.canonicalize();
      c = q.get_num();
    }
    b = std::move(r);
    g_ = mpq_class(a.back());
    // h = h^(1 - delta) * g^delta
    if (delta == 0) h = h;
    else h = qpow(g_, static_cast<unsigned long>(delta)) / qpow(h, static_cast<unsigned long>(delta - 1));
    if (zdeg(b) <= 0) break;
  }
  // h = h^(1 - deg A) * lc(B)^deg A
  const unsigned long da = static_cast<unsigned long>(zdeg(a));
  mpq_class last = qpow(mpq_class(b.back()), da);
  if (da == 0) last *= h;
  else last /= qpow(h, da - 1);
  return k.from_rational(t * last * s);
}

// Euclidean resultant over a field.
FieldElement resultant_euclid(UniPoly f, UniPoly g) {
  const Field& k = f.field();
  FieldElement result = k.one();
  for (;;) {
    const int m = f.degree(), n = g.degree();
    if (n == 0) return result * g.leading().pow(m);
    UniPoly r = f % g;
    if (r.is_zero()) return k.zero();
    const int deg_r = r.degree();
    if ((static_cast<long>(m) * n) & 1) result = -result;
    result *= g.leading().pow(m - deg_r);
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace

FieldElement resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant with the zero polynomial");
  if (!(f.field() == g.field())) throw MixedFields("resultant of polynomials over different fields");
  if (f.field().kind() == FieldKind::rational) return resultant_rational(f, g);
  return resultant_euclid(f, g);
}

// ---------------------------------------------------------------- squarefree

namespace {

// p-th root of a polynomial all of whose exponents are multiples of p.
UniPoly pth_root(const UniPoly& c) {
  const Field& k = c.field();
  const std::uint64_t p = k.characteristic();
  mpz_class e;  // a^(1/p) = a^(p^(k-1))
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k.degree() - 1));
  std::vector<FieldElement> out;
  for (int i = 0; i <= c.degree(); i += static_cast<int>(p)) out.push_back(c.coeff(i).pow(e));
  return UniPoly(k, std::move(out));
}

void musser(const UniPoly& f, int scale, std::vector<PolyFactor>& out) {
  // f monic
  UniPoly c = gcd(f, derivative(f));
  UniPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // remaining factor is a p-th power (characteristic p only)
    musser(pth_root(c.monic()).monic(), scale * static_cast<int>(f.field().characteristic()), out);
  }
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero");
  std::vector<PolyFactor> out;
  if (f.degree() == 0) return out;
  musser(f.monic(), 1, out);
  // merge equal multiplicities that arose from different recursion depths
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.multiplicity < b.multiplicity; });
  std::vector<PolyFactor> merged;
  for (auto& pf : out) {
    if (!merged.empty() && merged.back().multiplicity == pf.multiplicity) merged.back().factor *= pf.factor;
    else merged.push_back(std::move(pf));
  }
  return merged;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree part of zero");
  UniPoly acc = UniPoly::constant(f.field().one());
  for (const auto& pf : squarefree_decomposition(f)) acc *= pf.factor;
  return acc;
}

std::optional<UniPoly> square_root_up_to_scalar(const UniPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("square test of zero");
  UniPoly root = UniPoly::constant(f.field().one());
  for (const auto& pf : squarefree_decomposition(f)) {
    if (pf.multiplicity % 2 != 0) return std::nullopt;
    root *= pf.factor.pow(static_cast<unsigned>(pf.multiplicity / 2));
  }
  return root;
}

std::optional<PerfectSquare> is_perfect_square(const UniPoly& f) {
  auto root = square_root_up_to_scalar(f);
  if (!root || !f.leading().is_square()) return std::nullopt;
  return PerfectSquare{std::move(*root), f.leading()};
}

bool is_irreducible(const UniPoly& f) {
  const Field& k = f.field();
  if (!k.is_finite()) throw Unsupported("irreducibility test is implemented for finite fields");
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const UniPoly g = f.monic();
  const UniPoly x = UniPoly::x(k);
  const mpz_class q = k.order();
  auto frob = [&](int m) {
    mpz_class e;
    mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(m));
    return pow_mod(x, e, g);
  };
  if (!(frob(n) == x % g)) return false;
  int m = n;
  for (int r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    if (gcd(frob(n / r) - x, g).degree() != 0) return false;
  }
  return true;
}

}  // namespace howe
