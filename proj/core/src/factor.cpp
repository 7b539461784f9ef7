#include <algorithm>
#include <map>
#include <random>

#include "howe/unipoly.hpp"

namespace howe {

namespace {

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ca = a.coeff(i), cb = b.coeff(i);
    if (canonical_less(ca, cb)) return true;
    if (canonical_less(cb, ca)) return false;
  }
  return false;
}

UniPoly random_below(const Field& k, int degree, std::mt19937_64& rng) {
  std::vector<FieldElement> c;
  c.reserve(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) c.push_back(k.random(rng));
  return UniPoly(k, std::move(c));
}

// Splits a monic squarefree g, all of whose irreducible factors have degree d.
void equal_degree(const UniPoly& g, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const Field& k = g.field();
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), k.order().get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  const UniPoly one = UniPoly::constant(k.one());
  for (;;) {
    UniPoly a = random_below(k, g.degree(), rng);
    if (a.degree() < 1) continue;
    UniPoly h = gcd(g, a);
    if (h.degree() == 0) h = gcd(g, pow_mod(a, e, g) - one);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

// Distinct-degree factorization of a monic squarefree g, stopping after
// degree `limit`; returns (degree, product) pairs and leaves the rest in g.
std::vector<std::pair<int, UniPoly>> distinct_degree(UniPoly& g, int limit) {
  const Field& k = g.field();
  const UniPoly x = UniPoly::x(k);
  const mpz_class q = k.order();
  std::vector<std::pair<int, UniPoly>> out;
  UniPoly h = x % g;
  for (int d = 1; d <= limit && g.degree() >= 2 * d; ++d) {
    h = pow_mod(h, q, g);
    UniPoly part = gcd(g, h - x);
    if (part.degree() > 0) {
      out.emplace_back(d, part);
      g = g / part;
      h = h % g;
    }
  }
  if (g.degree() > 0 && g.degree() <= limit) {
    out.emplace_back(g.degree(), g);
    g = UniPoly::constant(k.one());
  }
  return out;
}

}  // namespace

std::vector<PolyFactor> factor_finite(const UniPoly& f, std::uint64_t seed) {
  if (!f.field().is_finite()) throw Unsupported("factor_finite needs a finite field");
  if (f.is_zero()) throw ZeroPolynomial("factorization of zero");
  std::mt19937_64 rng(seed);
  std::vector<PolyFactor> out;
  for (const auto& sf : squarefree_decomposition(f)) {
    UniPoly g = sf.factor;
    for (auto& [d, part] : distinct_degree(g, g.degree())) {
      std::vector<UniPoly> pieces;
      equal_degree(part, d, rng, pieces);
      for (auto& p : pieces) out.push_back({p.monic(), sf.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (poly_less(a.factor, b.factor)) return true;
    if (poly_less(b.factor, a.factor)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

// ---------------------------------------------------------------- embedding

namespace {

std::vector<FieldElement> linear_roots(const UniPoly& f) {
  std::vector<FieldElement> out;
  for (const auto& pf : factor_finite(f, 0x5eed)) {
    if (pf.factor.degree() == 1) out.push_back(-pf.factor.coeff(0));
  }
  std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& b) { return canonical_less(a, b); });
  return out;
}

}  // namespace

FieldEmbedding::FieldEmbedding(Field source, Field target) : source_(std::move(source)), target_(std::move(target)) {
  if (!source_.is_finite() || !target_.is_finite()) throw Unsupported("embeddings are defined between finite fields");
  if (source_.characteristic() != target_.characteristic())
    throw MixedFields("cannot embed " + source_.name() + " into " + target_.name());
  if (target_.degree() % source_.degree() != 0)
    throw MixedFields(source_.name() + " is not a subfield of " + target_.name());
  if (source_.kind() != FieldKind::extension || source_ == target_) return;
  std::vector<FieldElement> m;
  for (auto c : source_.modulus()) m.push_back(target_.from_int(static_cast<std::int64_t>(c)));
  auto rs = linear_roots(UniPoly(target_, std::move(m)));
  if (rs.empty()) throw MixedFields(source_.describe() + " has no image in " + target_.describe());
  generator_image_ = rs.front();
}

FieldElement FieldEmbedding::operator()(const FieldElement& a) const {
  if (!(a.field() == source_)) throw MixedFields("element of " + a.field().name() + " passed to embedding of " + source_.name());
  if (source_ == target_) return a;
  if (source_.kind() == FieldKind::prime) return target_.from_int(static_cast<std::int64_t>(a.value()));
  FieldElement acc = target_.zero();
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= *generator_image_;
    acc += target_.from_int(static_cast<std::int64_t>(c[i]));
  }
  return acc;
}

UniPoly FieldEmbedding::operator()(const UniPoly& f) const {
  std::vector<FieldElement> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back((*this)(v));
  return UniPoly(target_, std::move(c));
}

Extension extend(const Field& base, int d, std::uint64_t seed) {
  if (!base.is_finite()) throw Unsupported("extensions of Q are not supported");
  if (d < 1) throw InvalidField("extension degree must be >= 1");
  if (d == 1) return {base, FieldEmbedding(base, base)};
  Field big = build_extension(base.characteristic(), base.degree() * d, seed);
  return {big, FieldEmbedding(base, big)};
}

// ---------------------------------------------------------------- roots

RootSet roots(const UniPoly& f, int up_to_degree, std::uint64_t seed) {
  const Field& k = f.field();
  if (!k.is_finite()) throw Unsupported("root finding needs a finite field");
  if (f.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
  std::mt19937_64 rng(seed);
  std::map<int, Extension> extensions;
  RootSet out{{}, f};
  if (f.degree() == 0) return out;

  struct Found {
    UniPoly minpoly;
    int multiplicity;
  };
  std::vector<Found> found;
  for (const auto& sf : squarefree_decomposition(f)) {
    UniPoly g = sf.factor;
    for (auto& [d, part] : distinct_degree(g, up_to_degree)) {
      std::vector<UniPoly> pieces;
      equal_degree(part, d, rng, pieces);
      for (auto& p : pieces) found.push_back({p.monic(), sf.multiplicity});
    }
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return poly_less(a.minpoly, b.minpoly); });

  for (const auto& fd : found) {
    const int d = fd.minpoly.degree();
    for (int i = 0; i < fd.multiplicity; ++i) out.cofactor = out.cofactor / fd.minpoly;
    if (d == 1) {
      out.roots.push_back({-fd.minpoly.coeff(0), fd.multiplicity, 1, fd.minpoly});
      continue;
    }
    auto it = extensions.find(d);
    if (it == extensions.end()) it = extensions.emplace(d, extend(k, d, seed + static_cast<std::uint64_t>(d))).first;
    for (auto& v : linear_roots(it->second.embedding(fd.minpoly)))
      out.roots.push_back({v, fd.multiplicity, d, fd.minpoly});
  }
  return out;
}

}  // namespace howe
