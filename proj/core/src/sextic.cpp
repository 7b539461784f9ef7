#include "howe/sextic.hpp"

namespace howe {

// ---------------------------------------------------------------- data

std::string RamificationData::point_name(int index) {
  return (index < 4 ? "alpha" : "beta") + std::to_string(index % 4 + 1);
}

UniPoly RamificationData::phi1() const { return from_roots(field(), alphas); }
UniPoly RamificationData::phi2() const { return from_roots(field(), betas); }

std::vector<FieldElement> elementary_symmetric(const std::vector<FieldElement>& v) {
  const Field& k = v.front().field();
  // e[j] after processing a prefix; e[0] = 1
  std::vector<FieldElement> e(v.size() + 1, k.zero());
  e[0] = k.one();
  for (std::size_t n = 0; n < v.size(); ++n)
    for (std::size_t j = n + 1; j >= 1; --j) e[j] += e[j - 1] * v[n];
  return {e.begin() + 1, e.end()};
}

RamificationData validate(const std::vector<FieldElement>& alphas, const std::vector<FieldElement>& betas) {
  if (alphas.size() != 4 || betas.size() != 4) throw std::invalid_argument("expected four alphas and four betas");
  std::vector<FieldElement> all(alphas);
  all.insert(all.end(), betas.begin(), betas.end());
  for (const auto& v : all)
    if (!(v.field() == all.front().field())) throw MixedFields("ramification points from different fields");
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (all[static_cast<std::size_t>(i)] == all[static_cast<std::size_t>(j)])
        throw DuplicateRamificationPoint(RamificationData::point_name(i), RamificationData::point_name(j),
                                         all[static_cast<std::size_t>(i)].to_string());
  return {alphas, betas, elementary_symmetric(alphas), elementary_symmetric(betas)};
}

RamificationData validate(const std::vector<P1Point>& alphas, const std::vector<P1Point>& betas) {
  std::vector<FieldElement> a, b;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!alphas[i].value) throw InfinityNotSupported(RamificationData::point_name(static_cast<int>(i)) + " is infinite");
    a.push_back(*alphas[i].value);
  }
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!betas[i].value) throw InfinityNotSupported(RamificationData::point_name(static_cast<int>(i) + 4) + " is infinite");
    b.push_back(*betas[i].value);
  }
  return validate(a, b);
}

// ---------------------------------------------------------------- sextic

std::vector<SexticCoefficients::Entry> SexticCoefficients::ordered() const {
  return {{"c60", 6, 0, c60}, {"c42", 4, 2, c42}, {"c50", 5, 0, c50}, {"c32", 3, 2, c32}, {"c40", 4, 0, c40},
          {"c22", 2, 2, c22}, {"c04", 0, 4, c04}, {"c30", 3, 0, c30}, {"c12", 1, 2, c12}, {"c20", 2, 0, c20},
          {"c02", 0, 2, c02}, {"c10", 1, 0, c10}, {"c00", 0, 0, c00}};
}

BiPoly SexticCoefficients::to_bipoly() const {
  BiPoly f(c00.field());
  for (const auto& e : ordered()) f.add_term(e.i, e.j, e.value);
  return f;
}

SexticCoefficients sextic_coeffs(const RamificationData& rd) {
  const Field& k = rd.field();
  const auto two = k.from_int(2);
  const auto& s = rd.sigma;
  const auto& t = rd.tau;
  const auto d1 = s[0] - t[0], d2 = s[1] - t[1], d3 = s[2] - t[2], d4 = s[3] - t[3];
  return {
      d1 * d1,                           // c60
      -two * d1 * d2,                    // c50
      k.from_int(-4),                    // c42
      two * d1 * d3 + d2 * d2,           // c40
      two * (s[0] + t[0]),               // c32
      -two * d1 * d4 - two * d2 * d3,    // c30
      -two * (s[1] + t[1]),              // c22
      d3 * d3 + two * d4 * d2,           // c20
      two * (s[2] + t[2]),               // c12
      -two * d4 * d3,                    // c10
      k.one(),                           // c04
      -two * (s[3] + t[3]),              // c02
      d4 * d4,                           // c00
  };
}

BiPoly assemble_sextic(const RamificationData& rd) {
  const Field& k = rd.field();
  const UniPoly p1 = rd.phi1(), p2 = rd.phi2();
  const UniPoly diff = p1 - p2;
  BiPoly f = BiPoly::monomial(k.one(), 0, 4);
  f += BiPoly::from_x((p1 + p2) * k.from_int(-2), 2);
  f += BiPoly::from_x(diff * diff);
  return f;
}

SexticModel build_model(const RamificationData& rd) {
  SexticCoefficients c = sextic_coeffs(rd);
  BiPoly f = c.to_bipoly();
  HomPoly F = homogenize(f, 6);
  return {rd, std::move(c), std::move(f), std::move(F)};
}

// ---------------------------------------------------------------- Mobius

std::optional<FieldElement> MobiusTransform::apply(const FieldElement& x) const {
  FieldElement den = c * x + d;
  if (den.is_zero()) return std::nullopt;
  return (a * x + b) / den;
}

namespace {

MobiusTransform normalized(FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
  FieldElement s = d.is_zero() ? c.inv() : d.inv();
  return {a * s, b * s, c * s, d * s};
}

MobiusTransform compose(const MobiusTransform& m, const MobiusTransform& n) {
  // m after n
  return normalized(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

}  // namespace

MobiusTransform MobiusTransform::inverse() const { return normalized(d, -b, -c, a); }

MobiusTransform MobiusTransform::identity(const Field& k) { return {k.one(), k.zero(), k.zero(), k.one()}; }

RamificationData apply_mobius(const RamificationData& rd, const MobiusTransform& m) {
  std::vector<FieldElement> a, b;
  for (int i = 0; i < 8; ++i) {
    const auto& v = i < 4 ? rd.alphas[static_cast<std::size_t>(i)] : rd.betas[static_cast<std::size_t>(i - 4)];
    auto img = m.apply(v);
    if (!img) throw NormalizationImpossible(RamificationData::point_name(i) + " is sent to infinity");
    (i < 4 ? a : b).push_back(*img);
  }
  return validate(a, b);
}

Normalization mobius_normalize(const RamificationData& rd) {
  const Field& k = rd.field();
  std::vector<FieldElement> pts(rd.alphas);
  pts.insert(pts.end(), rd.betas.begin(), rd.betas.end());
  // u -> -u / (u - 2) fixes 0 and 1 and sends infinity to -1
  const MobiusTransform s{k.from_int(-1), k.zero(), k.one(), k.from_int(-2)};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int l = 0; l < 8; ++l) {
        if (i == j || j == l || i == l) continue;
        const auto &p1 = pts[static_cast<std::size_t>(i)], &p2 = pts[static_cast<std::size_t>(j)],
                   &p3 = pts[static_cast<std::size_t>(l)];
        // x -> (x - p1)(p2 - p3) / ((x - p3)(p2 - p1)) sends p1, p2, p3 to 0, 1, infinity
        const MobiusTransform t{p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1)};
        const MobiusTransform m = compose(normalized(s.a, s.b, s.c, s.d), normalized(t.a, t.b, t.c, t.d));
        bool finite = true;
        for (const auto& p : pts)
          if (!m.apply(p)) finite = false;
        if (!finite) continue;
        return {apply_mobius(rd, m), m, {i, j, l}};
      }
  throw NormalizationImpossible("every triple sends some point to infinity");
}

// ---------------------------------------------------------------- fiber product

std::pair<FieldElement, FieldElement> fiber_to_plane(const FiberPoint& p) { return {p.x, p.y1 + p.y2}; }

FiberPoint lift_point(const SexticModel& model, const FieldElement& x, const FieldElement& y, std::uint64_t seed) {
  const Field& k = model.source.field();
  if (!k.is_finite()) throw Unsupported("point lifting needs a finite field");
  if (!(x.field() == k) || !(y.field() == k)) throw MixedFields("point coordinates must lie in " + k.name());
  if (!model.f.eval(x, y).is_zero()) throw NotOnCurve("(" + x.to_string() + ", " + y.to_string() + ") is not on the sextic");
  const FieldElement u1 = model.source.phi1()(x), u2 = model.source.phi2()(x);
  auto r1 = u1.sqrt(), r2 = u2.sqrt();
  int degree = 1;
  std::optional<FieldEmbedding> emb;
  if (!r1 || !r2) {
    Extension ext = extend(k, 2, seed);
    emb = ext.embedding;
    r1 = ext.embedding(u1).sqrt();
    r2 = ext.embedding(u2).sqrt();
    degree = 2;
  }
  const FieldElement xe = emb ? (*emb)(x) : x, ye = emb ? (*emb)(y) : y;
  std::vector<FiberPoint> found;
  for (const auto& a : *r1)
    for (const auto& b : *r2)
      if (a + b == ye) found.push_back({xe, a, b, degree});
  if (found.empty()) throw NotOnCurve("no fiber product point above (" + x.to_string() + ", " + y.to_string() + ")");
  if (found.size() > 1) throw IndeterminateLift(std::move(found));
  return found.front();
}

std::optional<FiberPoint> random_fiber_point(const RamificationData& rd, std::mt19937_64& rng, int attempts) {
  const Field& k = rd.field();
  const UniPoly p1 = rd.phi1(), p2 = rd.phi2();
  for (int i = 0; i < attempts; ++i) {
    FieldElement x = k.random(rng);
    auto r1 = p1(x).sqrt(), r2 = p2(x).sqrt();
    if (!r1 || !r2) continue;
    const auto& y1 = (*r1)[rng() % r1->size()];
    const auto& y2 = (*r2)[rng() % r2->size()];
    return FiberPoint{x, y1, y2, 1};
  }
  return std::nullopt;
}

int genus_of_howe(int g1, int g2, int r) { return 2 * (g1 + g2) + 1 - r; }

RamificationData translate(const RamificationData& rd, const FieldElement& c) {
  std::vector<FieldElement> a, b;
  for (const auto& v : rd.alphas) a.push_back(v + c);
  for (const auto& v : rd.betas) b.push_back(v + c);
  return validate(a, b);
}

RamificationData random_ramification(const Field& k, std::mt19937_64& rng, int rational_bound) {
  std::uniform_int_distribution<int> dist(-rational_bound, rational_bound);
  for (;;) {
    std::vector<FieldElement> v;
    for (int i = 0; i < 8; ++i) v.push_back(k.is_finite() ? k.random(rng) : k.from_int(dist(rng)));
    bool distinct = true;
    for (std::size_t i = 0; i < 8 && distinct; ++i)
      for (std::size_t j = i + 1; j < 8; ++j)
        if (v[i] == v[j]) {
          distinct = false;
          break;
        }
    if (distinct) return validate(std::vector<FieldElement>(v.begin(), v.begin() + 4), std::vector<FieldElement>(v.begin() + 4, v.end()));
  }
}

}  // namespace howe
