#include "howe/field.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "fp_poly.hpp"

namespace howe {

namespace detail {
struct FieldSpec {
  FieldKind kind;
  std::uint64_t p = 0;
  int k = 1;
  std::vector<std::uint64_t> modulus;  // extension only, monic, constant first
};
}  // namespace detail

namespace fp = detail::fp;
using fp::u64;

// ---------------------------------------------------------------- primality

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = fp::pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = fp::mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p))
    throw InvalidField("field characteristic must be a prime >= 5, got " + std::to_string(p));
  auto spec = std::make_shared<detail::FieldSpec>();
  spec->kind = FieldKind::prime;
  spec->p = p;
  return Field(std::move(spec));
}

Field Field::rational() {
  static const Field q = [] {
    auto spec = std::make_shared<detail::FieldSpec>();
    spec->kind = FieldKind::rational;
    return Field(std::move(spec));
  }();
  return q;
}

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (p < 5 || !is_prime(p))
    throw InvalidField("field characteristic must be a prime >= 5, got " + std::to_string(p));
  for (auto& c : modulus) c %= p;
  fp::trim(modulus);
  if (modulus.size() < 3 || modulus.back() != 1)
    throw InvalidField("extension modulus must be monic of degree >= 2");
  if (!fp::is_irreducible(modulus, p)) throw InvalidField("extension modulus is reducible over F_p");
  auto spec = std::make_shared<detail::FieldSpec>();
  spec->kind = FieldKind::extension;
  spec->p = p;
  spec->k = static_cast<int>(modulus.size()) - 1;
  spec->modulus = std::move(modulus);
  return Field(std::move(spec));
}

Field build_extension(std::uint64_t p, int k, std::uint64_t seed) {
  if (k < 1) throw InvalidField("extension degree must be >= 1");
  if (k == 1) return Field::prime(p);
  if (p < 5 || !is_prime(p))
    throw InvalidField("field characteristic must be a prime >= 5, got " + std::to_string(p));
  std::mt19937_64 rng(seed);
  for (;;) {
    fp::Poly m = fp::random_monic(k, p, rng);
    if (m[0] == 0) continue;
    if (fp::is_irreducible(m, p)) return Field::extension(p, std::move(m));
  }
}

FieldKind Field::kind() const { return spec().kind; }
std::uint64_t Field::characteristic() const { return spec().p; }
int Field::degree() const { return spec().k; }
const std::vector<std::uint64_t>& Field::modulus() const { return spec().modulus; }

mpz_class Field::order() const {
  if (!is_finite()) throw Unsupported("Q has no finite order");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(spec().p), static_cast<unsigned long>(spec().k));
  return r;
}

std::string Field::name() const {
  switch (kind()) {
    case FieldKind::prime: return "F_" + std::to_string(spec().p);
    case FieldKind::extension: return "F_" + std::to_string(spec().p) + "^" + std::to_string(spec().k);
    case FieldKind::rational: return "Q";
  }
  return {};
}

std::string Field::describe() const {
  if (kind() != FieldKind::extension) return name();
  std::ostringstream os;
  os << name() << " = F_" << spec().p << "[t]/(";
  bool first = true;
  for (int i = spec().k; i >= 0; --i) {
    u64 c = spec().modulus[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  os << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.spec_ == b.spec_) return true;
  const auto& x = a.spec();
  const auto& y = b.spec();
  return x.kind == y.kind && x.p == y.p && x.k == y.k && x.modulus == y.modulus;
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t v) const { return from_mpz(mpz_class(static_cast<long>(v))); }

FieldElement Field::from_mpz(const mpz_class& v) const {
  switch (kind()) {
    case FieldKind::rational: return FieldElement(*this, mpq_class(v));
    case FieldKind::prime:
    case FieldKind::extension: {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(spec().p));
      u64 c = r.get_ui();
      if (kind() == FieldKind::prime) return FieldElement(*this, c);
      std::vector<u64> coeffs(static_cast<std::size_t>(spec().k), 0);
      coeffs[0] = c;
      return FieldElement(*this, std::move(coeffs));
    }
  }
  throw Unsupported("unknown field kind");
}

FieldElement Field::from_rational(const mpq_class& v) const {
  if (kind() == FieldKind::rational) {
    mpq_class c = v;
    c.canonicalize();
    return FieldElement(*this, std::move(c));
  }
  return from_mpz(v.get_num()) / from_mpz(v.get_den());
}

FieldElement Field::from_coeffs(std::vector<std::uint64_t> coeffs) const {
  if (kind() == FieldKind::rational) throw Unsupported("coefficient vectors only describe finite fields");
  if (coeffs.size() > static_cast<std::size_t>(spec().k)) {
    if (kind() == FieldKind::prime) throw std::invalid_argument("prime field elements have one coefficient");
    for (auto& c : coeffs) c %= spec().p;
    coeffs = fp::mod(coeffs, spec().modulus, spec().p);
  }
  coeffs.resize(static_cast<std::size_t>(spec().k), 0);
  for (auto& c : coeffs) c %= spec().p;
  if (kind() == FieldKind::prime) return FieldElement(*this, coeffs[0]);
  return FieldElement(*this, std::move(coeffs));
}

FieldElement Field::generator() const {
  if (kind() != FieldKind::extension) throw Unsupported("generator() requires an extension field");
  std::vector<u64> c(static_cast<std::size_t>(spec().k), 0);
  c[1] = 1;
  return FieldElement(*this, std::move(c));
}

FieldElement Field::element_at(std::uint64_t index) const {
  if (!is_finite()) throw Unsupported("cannot enumerate Q");
  std::vector<u64> c(static_cast<std::size_t>(spec().k), 0);
  for (auto& d : c) {
    d = index % spec().p;
    index /= spec().p;
  }
  if (kind() == FieldKind::prime) return FieldElement(*this, c[0]);
  return FieldElement(*this, std::move(c));
}

FieldElement Field::random(std::mt19937_64& rng) const {
  if (!is_finite()) throw Unsupported("no uniform distribution on Q");
  std::uniform_int_distribution<u64> dist(0, spec().p - 1);
  if (kind() == FieldKind::prime) return FieldElement(*this, dist(rng));
  std::vector<u64> c(static_cast<std::size_t>(spec().k));
  for (auto& d : c) d = dist(rng);
  return FieldElement(*this, std::move(c));
}

FieldElement Field::parse(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    mpz_class z;
    std::string str(s);
    if (str.empty() || z.set_str(str, 10) != 0)
      throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return z;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_mpz(parse_int(text));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  return from_rational(mpq_class(num, den));
}

// ---------------------------------------------------------------- elements

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) throw MixedFields("operands from " + field_.name() + " and " + o.field_.name());
}

bool FieldElement::is_zero() const {
  return std::visit(
      [](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, u64>) return r == 0;
        else if constexpr (std::is_same_v<T, std::vector<u64>>)
          return std::all_of(r.begin(), r.end(), [](u64 c) { return c == 0; });
        else return sgn(r) == 0;
      },
      repr_);
}

bool FieldElement::is_one() const { return *this == field_.one(); }

FieldElement FieldElement::operator-() const {
  const u64 p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::prime: return FieldElement(field_, fp::sub(0, std::get<u64>(repr_), p));
    case FieldKind::extension: {
      auto c = std::get<std::vector<u64>>(repr_);
      for (auto& v : c) v = fp::sub(0, v, p);
      return FieldElement(field_, std::move(c));
    }
    case FieldKind::rational: return FieldElement(field_, mpq_class(-std::get<mpq_class>(repr_)));
  }
  return *this;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  const u64 p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::prime: std::get<u64>(repr_) = fp::add(std::get<u64>(repr_), std::get<u64>(o.repr_), p); break;
    case FieldKind::extension: {
      auto& a = std::get<std::vector<u64>>(repr_);
      const auto& b = std::get<std::vector<u64>>(o.repr_);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = fp::add(a[i], b[i], p);
      break;
    }
    case FieldKind::rational: std::get<mpq_class>(repr_) += std::get<mpq_class>(o.repr_); break;
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  const u64 p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::prime: std::get<u64>(repr_) = fp::sub(std::get<u64>(repr_), std::get<u64>(o.repr_), p); break;
    case FieldKind::extension: {
      auto& a = std::get<std::vector<u64>>(repr_);
      const auto& b = std::get<std::vector<u64>>(o.repr_);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = fp::sub(a[i], b[i], p);
      break;
    }
    case FieldKind::rational: std::get<mpq_class>(repr_) -= std::get<mpq_class>(o.repr_); break;
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  const u64 p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::prime: std::get<u64>(repr_) = fp::mul(std::get<u64>(repr_), std::get<u64>(o.repr_), p); break;
    case FieldKind::extension: {
      auto& a = std::get<std::vector<u64>>(repr_);
      fp::Poly prod = fp::mod(fp::mul(a, std::get<std::vector<u64>>(o.repr_), p), field_.modulus(), p);
      prod.resize(a.size(), 0);
      a = std::move(prod);
      break;
    }
    case FieldKind::rational: std::get<mpq_class>(repr_) *= std::get<mpq_class>(o.repr_); break;
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  return *this *= o.inv();
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.name());
  const u64 p = field_.characteristic();
  switch (field_.kind()) {
    case FieldKind::prime: return FieldElement(field_, fp::inv(std::get<u64>(repr_), p));
    case FieldKind::extension: {
      fp::Poly a = std::get<std::vector<u64>>(repr_);
      fp::trim(a);
      fp::Poly r = fp::inv_mod(a, field_.modulus(), p);
      r.resize(static_cast<std::size_t>(field_.degree()), 0);
      return FieldElement(field_, std::move(r));
    }
    case FieldKind::rational: return FieldElement(field_, mpq_class(1 / std::get<mpq_class>(repr_)));
  }
  return *this;
}

FieldElement FieldElement::pow(const mpz_class& e) const {
  if (e < 0) return inv().pow(mpz_class(-e));
  if (field_.kind() == FieldKind::prime && e.fits_ulong_p())
    return FieldElement(field_, fp::pow(std::get<u64>(repr_), e.get_ui(), field_.characteristic()));
  FieldElement result = field_.one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

namespace {
bool mpz_is_square(const mpz_class& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }
}  // namespace

bool FieldElement::is_square() const {
  if (is_zero()) return true;
  if (field_.kind() == FieldKind::rational) {
    const auto& q = std::get<mpq_class>(repr_);
    return mpz_is_square(q.get_num()) && mpz_is_square(q.get_den());
  }
  mpz_class e = (field_.order() - 1) / 2;
  return pow(e).is_one();
}

std::optional<std::vector<FieldElement>> FieldElement::sqrt() const {
  if (!field_.is_finite()) throw Unsupported("sqrt over Q is not supported; work symbolically");
  if (is_zero()) return std::vector<FieldElement>{*this};
  if (!is_square()) return std::nullopt;

  // Tonelli-Shanks over F_q with q - 1 = 2^s * t, t odd.
  const mpz_class q1 = field_.order() - 1;
  mpz_class t = q1;
  unsigned long s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t /= 2;
    ++s;
  }
  // smallest non-residue in enumeration order
  FieldElement z = field_.one();
  const mpz_class half = q1 / 2;
  for (u64 i = 2;; ++i) {
    z = field_.element_at(i);
    if (!z.is_zero() && !z.pow(half).is_one()) break;
  }
  FieldElement c = z.pow(t);
  FieldElement x = pow((t + 1) / 2);
  FieldElement b = pow(t);
  unsigned long m = s;
  while (!b.is_one()) {
    unsigned long i = 0;
    FieldElement b2 = b;
    while (!b2.is_one()) {
      b2 *= b2;
      ++i;
    }
    FieldElement g = c;
    for (unsigned long j = 0; j + 1 < m - i; ++j) g *= g;
    x *= g;
    c = g * g;
    b *= c;
    m = i;
  }
  FieldElement neg = -x;
  if (canonical_less(neg, x)) std::swap(x, neg);
  return std::vector<FieldElement>{x, neg};
}

std::uint64_t FieldElement::value() const {
  if (field_.kind() != FieldKind::prime) throw Unsupported("value() requires a prime field element");
  return std::get<u64>(repr_);
}

const std::vector<std::uint64_t>& FieldElement::coeffs() const {
  if (field_.kind() != FieldKind::extension) throw Unsupported("coeffs() requires an extension field element");
  return std::get<std::vector<u64>>(repr_);
}

const mpq_class& FieldElement::rational() const {
  if (field_.kind() != FieldKind::rational) throw Unsupported("rational() requires an element of Q");
  return std::get<mpq_class>(repr_);
}

std::string FieldElement::to_string() const {
  switch (field_.kind()) {
    case FieldKind::prime: return std::to_string(std::get<u64>(repr_));
    case FieldKind::rational: return std::get<mpq_class>(repr_).get_str();
    case FieldKind::extension: {
      const auto& c = std::get<std::vector<u64>>(repr_);
      std::string out;
      for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
          out += std::to_string(c[i]);
        } else {
          if (c[i] != 1) out += std::to_string(c[i]) + "*";
          out += "t";
          if (i > 1) out += "^" + std::to_string(i);
        }
      }
      return out.empty() ? "0" : out;
    }
  }
  return {};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.repr_ == b.repr_;
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  switch (a.field_.kind()) {
    case FieldKind::prime: return std::get<u64>(a.repr_) < std::get<u64>(b.repr_);
    case FieldKind::rational: return std::get<mpq_class>(a.repr_) < std::get<mpq_class>(b.repr_);
    case FieldKind::extension: {
      const auto& x = std::get<std::vector<u64>>(a.repr_);
      const auto& y = std::get<std::vector<u64>>(b.repr_);
      return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
    }
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

}  // namespace howe
