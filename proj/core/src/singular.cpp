#include "howe/singular.hpp"

#include <algorithm>
#include <thread>

#include "fp_poly.hpp"

namespace howe {

// ---------------------------------------------------------------- types

std::string SingularityType::name() const {
  switch (label) {
    case SingularityLabel::I1: return "I-1";
    case SingularityLabel::I2: return "I-2";
    case SingularityLabel::I3: return "I-3";
    case SingularityLabel::II1: return "II-1";
    case SingularityLabel::II2: return "II-2";
    case SingularityLabel::II3: return "II-3";
    case SingularityLabel::II4: return "II-4";
  }
  return "?";
}

SingularityType SingularityType::of(SingularityLabel label) {
  switch (label) {
    case SingularityLabel::I1: return {label, 3, 1};
    case SingularityLabel::I2: return {label, 2, 1};
    case SingularityLabel::I3: return {label, 1, 1};
    case SingularityLabel::II1: return {label, 2, 2};
    case SingularityLabel::II2: return {label, 1, 2};
    case SingularityLabel::II3: return {label, 1, 2};
    case SingularityLabel::II4: return {label, 0, 2};
  }
  return {label, 0, 0};
}

std::optional<SingularityLabel> parse_label(std::string_view name) {
  for (auto l : {SingularityLabel::I1, SingularityLabel::I2, SingularityLabel::I3, SingularityLabel::II1,
                 SingularityLabel::II2, SingularityLabel::II3, SingularityLabel::II4})
    if (SingularityType::of(l).name() == name) return l;
  return std::nullopt;
}

UniPoly h1_poly(const RamificationData& rd) {
  return UniPoly(rd.field(), {-rd.diff(4), rd.diff(3), -rd.diff(2), rd.diff(1)});
}

Classification classify(const RamificationData& rd) {
  const UniPoly h = h1_poly(rd);
  const UniPoly dh = derivative(h);
  if (!rd.diff(1).is_zero()) {
    FieldElement r1 = resultant(h, dh);
    if (!r1.is_zero()) return {SingularityType::of(SingularityLabel::I1), r1, std::nullopt};
    FieldElement r2 = resultant(dh, derivative(dh));
    if (!r2.is_zero()) return {SingularityType::of(SingularityLabel::I2), r1, r2};
    return {SingularityType::of(SingularityLabel::I3), r1, r2};
  }
  if (!rd.diff(2).is_zero()) {
    FieldElement r1 = resultant(h, dh);
    return {SingularityType::of(r1.is_zero() ? SingularityLabel::II2 : SingularityLabel::II1), r1, std::nullopt};
  }
  if (!rd.diff(3).is_zero()) return {SingularityType::of(SingularityLabel::II3), std::nullopt, std::nullopt};
  return {SingularityType::of(SingularityLabel::II4), std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------- points

std::string SingularPoint::to_string() const {
  switch (kind) {
    case Kind::y_infinity: return "(0:1:0)";
    case Kind::x_infinity: return "(1:0:0)";
    case Kind::affine: break;
  }
  if (coords) return "(" + (*coords)[0].to_string() + ":0:1)";
  return "(" + minimal_polynomial->to_string() + " = 0 : 0 : 1)";
}

namespace {

SingularPoint explicit_affine(const FieldElement& xi, const Field& base, int degree, const UniPoly& minpoly) {
  SingularPoint p{SingularPoint::Kind::affine, std::vector<FieldElement>{xi, xi.field().zero(), xi.field().one()},
                  degree, minpoly, 1, std::nullopt, {}};
  if (!(xi.field() == base)) p.embedding = FieldEmbedding(base, xi.field());
  return p;
}

SingularPoint rational_affine(const FieldElement& xi) {
  const Field& k = xi.field();
  return explicit_affine(xi, k, 1, UniPoly(k, {-xi, k.one()}));
}

SingularPoint at_infinity(const Field& k, SingularPoint::Kind kind) {
  std::vector<FieldElement> c = kind == SingularPoint::Kind::y_infinity
                                    ? std::vector<FieldElement>{k.zero(), k.one(), k.zero()}
                                    : std::vector<FieldElement>{k.one(), k.zero(), k.zero()};
  return {kind, std::move(c), 1, std::nullopt, 1, std::nullopt, {}};
}

bool affine_less(const SingularPoint& a, const SingularPoint& b) {
  if (a.extension_degree != b.extension_degree) return a.extension_degree < b.extension_degree;
  if (a.coords && b.coords) return canonical_less((*a.coords)[0], (*b.coords)[0]);
  if (a.coords != b.coords) return a.coords.has_value();
  return a.minimal_polynomial->to_string() < b.minimal_polynomial->to_string();
}

UniPoly on_axis(const HomPoly& G) { return G.dehomogenize(Var::z).at_y_zero(); }

}  // namespace

std::vector<SingularPoint> singular_points(const SexticModel& model, std::uint64_t seed) {
  const RamificationData& rd = model.source;
  const Field& k = rd.field();
  const Classification cls = classify(rd);
  std::vector<SingularPoint> out;
  switch (cls.type.label) {
    case SingularityLabel::I3: out.push_back(rational_affine(rd.diff(2) / (k.from_int(3) * rd.diff(1)))); break;
    case SingularityLabel::II2: out.push_back(rational_affine(rd.diff(3) / (k.from_int(2) * rd.diff(2)))); break;
    case SingularityLabel::II3: out.push_back(rational_affine(rd.diff(4) / rd.diff(3))); break;
    case SingularityLabel::II4: break;
    default: {
      const UniPoly h = h1_poly(rd);
      if (k.is_finite()) {
        for (const auto& r : roots(h, 3, seed).roots) {
          if (r.extension_degree == 1) out.push_back(rational_affine(r.value));
          else out.push_back(explicit_affine(r.value, k, r.extension_degree, r.minimal_polynomial));
        }
      } else {
        for (const auto& pf : factor_rational(h).factors) {
          if (pf.factor.degree() == 1) {
            out.push_back(rational_affine(-pf.factor.coeff(0) / pf.factor.coeff(1)));
          } else {
            const int d = pf.factor.degree();
            out.push_back({SingularPoint::Kind::affine, std::nullopt, d, pf.factor, d, std::nullopt, {}});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), affine_less);
  out.push_back(at_infinity(k, SingularPoint::Kind::y_infinity));
  if (rd.diff(1).is_zero()) out.push_back(at_infinity(k, SingularPoint::Kind::x_infinity));
  for (auto& p : out) p.certificate = verify_multiplicity_two(model.F, p);
  return out;
}

Certificate verify_multiplicity_two(const HomPoly& F0, const SingularPoint& p) {
  static const std::pair<Var, Var> second[] = {{Var::y, Var::y}, {Var::z, Var::z}, {Var::x, Var::x},
                                               {Var::x, Var::y}, {Var::x, Var::z}, {Var::y, Var::z}};
  static const char* const names[] = {"F_yy", "F_zz", "F_xx", "F_xy", "F_xz", "F_yz"};
  // designated partial first
  std::vector<int> order = p.kind == SingularPoint::Kind::y_infinity ? std::vector<int>{1, 0, 2, 3, 4, 5}
                                                                      : std::vector<int>{0, 1, 2, 3, 4, 5};
  if (p.coords) {
    const HomPoly F = p.embedding ? F0.embed(*p.embedding) : F0;
    const auto& c = *p.coords;
    for (const HomPoly& G : {F, F.partial(Var::x), F.partial(Var::y), F.partial(Var::z)})
      if (!G.eval(c[0], c[1], c[2]).is_zero()) throw NotSingular(p.to_string() + " is not a singular point");
    for (int i : order) {
      FieldElement v = F.partial(second[i].first).partial(second[i].second).eval(c[0], c[1], c[2]);
      if (!v.is_zero()) return {names[i], v, std::nullopt};
    }
    throw MultiplicityExceedsTwo(p.to_string() + " has multiplicity above two");
  }
  const UniPoly& m = *p.minimal_polynomial;
  for (const HomPoly& G : {F0, F0.partial(Var::x), F0.partial(Var::y), F0.partial(Var::z)})
    if (!(on_axis(G) % m).is_zero()) throw NotSingular(p.to_string() + " is not a singular point");
  for (int i : order) {
    UniPoly r = on_axis(F0.partial(second[i].first).partial(second[i].second)) % m;
    if (!r.is_zero()) return {names[i], std::nullopt, r};
  }
  throw MultiplicityExceedsTwo(p.to_string() + " has multiplicity above two");
}

// ---------------------------------------------------------------- brute force

ProjectivePoint normalize_point(ProjectivePoint p) {
  for (int i = 2; i >= 0; --i) {
    if (p[static_cast<std::size_t>(i)].is_zero()) continue;
    const FieldElement s = p[static_cast<std::size_t>(i)].inv();
    for (auto& c : p) c *= s;
    return p;
  }
  throw std::invalid_argument("(0:0:0) is not a projective point");
}

bool projective_less(const ProjectivePoint& a, const ProjectivePoint& b) {
  // chart z = 1, then y = 1, then (1:0:0); inside a chart by x, then y
  auto chart = [](const ProjectivePoint& p) { return !p[2].is_zero() ? 0 : !p[1].is_zero() ? 1 : 2; };
  if (chart(a) != chart(b)) return chart(a) < chart(b);
  if (!(a[0] == b[0])) return canonical_less(a[0], b[0]);
  return canonical_less(a[1], b[1]);
}

std::string point_string(const ProjectivePoint& p) {
  return "(" + p[0].to_string() + ":" + p[1].to_string() + ":" + p[2].to_string() + ")";
}

namespace {

// F and its first partials, evaluated together.
class Evaluator {
 public:
  explicit Evaluator(const HomPoly& F) : field_(F.field()) {
    polys_ = {F, F.partial(Var::x), F.partial(Var::y), F.partial(Var::z)};
    if (field_.kind() == FieldKind::prime) {
      p_ = field_.characteristic();
      for (const auto& G : polys_) {
        std::vector<std::pair<std::array<int, 3>, std::uint64_t>> t;
        for (const auto& [e, c] : G.terms()) t.push_back({e, c.value()});
        fast_.push_back(std::move(t));
      }
    }
  }

  bool singular_at(std::uint64_t xi, std::uint64_t yi, std::uint64_t zi) const {
    if (p_) {
      namespace fp = detail::fp;
      for (const auto& terms : fast_) {
        std::uint64_t acc = 0;
        for (const auto& [e, c] : terms) {
          std::uint64_t v = c;
          v = fp::mul(v, fp::pow(xi, static_cast<std::uint64_t>(e[0]), p_), p_);
          v = fp::mul(v, fp::pow(yi, static_cast<std::uint64_t>(e[1]), p_), p_);
          v = fp::mul(v, fp::pow(zi, static_cast<std::uint64_t>(e[2]), p_), p_);
          acc = fp::add(acc, v, p_);
        }
        if (acc != 0) return false;
      }
      return true;
    }
    const FieldElement x = field_.element_at(xi), y = field_.element_at(yi), z = field_.element_at(zi);
    for (const auto& G : polys_)
      if (!G.eval(x, y, z).is_zero()) return false;
    return true;
  }

 private:
  Field field_;
  std::vector<HomPoly> polys_;
  std::uint64_t p_ = 0;
  std::vector<std::vector<std::pair<std::array<int, 3>, std::uint64_t>>> fast_;
};

}  // namespace

std::vector<ProjectivePoint> brute_force_singular_scan(const HomPoly& F, std::uint64_t budget, unsigned threads) {
  const Field& k = F.field();
  if (!k.is_finite()) throw Unsupported("brute-force scan needs a finite field");
  const mpz_class qz = k.order();
  const mpz_class points = qz * qz + qz + 1;
  if (points > mpz_class(static_cast<unsigned long>(budget)))
    throw BudgetExceeded("scan of P^2 over " + k.name() + " needs " + points.get_str() + " evaluations, budget is " +
                         std::to_string(budget));
  const std::uint64_t q = qz.get_ui();
  const Evaluator ev(F);
  // index 1 is the element one in element_at order
  std::vector<std::vector<std::array<std::uint64_t, 3>>> found(std::max(1u, threads));
  auto work = [&](unsigned t) {
    for (std::uint64_t x = t; x < q; x += found.size()) {
      for (std::uint64_t y = 0; y < q; ++y)
        if (ev.singular_at(x, y, 1)) found[t].push_back({x, y, 1});
      if (ev.singular_at(x, 1, 0)) found[t].push_back({x, 1, 0});
    }
  };
  if (found.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < found.size(); ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<ProjectivePoint> out;
  for (const auto& part : found)
    for (const auto& [x, y, z] : part) out.push_back({k.element_at(x), k.element_at(y), k.element_at(z)});
  if (ev.singular_at(1, 0, 0)) out.push_back({k.one(), k.zero(), k.zero()});
  std::sort(out.begin(), out.end(), projective_less);
  return out;
}

bool no_offaxis_singularities_check(const HomPoly& F, std::uint64_t budget) {
  const Field& k = F.field();
  for (const auto& p : brute_force_singular_scan(F, budget)) {
    const bool z_zero = p[2].is_zero();
    if (!z_zero && !p[1].is_zero()) return false;
    if (z_zero && !(p == ProjectivePoint{k.zero(), k.one(), k.zero()}) && !(p == ProjectivePoint{k.one(), k.zero(), k.zero()}))
      return false;
  }
  return true;
}

namespace {

// Substitutes y^2 -> s in a polynomial even in y.
UniPoly reduce_even(const BiPoly& g, const UniPoly& s) {
  UniPoly acc(g.field());
  for (const auto& [e, c] : g.terms()) {
    if (e.second % 2 != 0) throw std::logic_error("polynomial is not even in y");
    acc += UniPoly::monomial(c, e.first) * s.pow(static_cast<unsigned>(e.second / 2));
  }
  return acc;
}

// Removes from g every irreducible factor it shares with s.
UniPoly strip_common(UniPoly g, const UniPoly& s) {
  for (;;) {
    UniPoly h = gcd(g, s);
    if (h.degree() <= 0) return g;
    g = g / h;
  }
}

}  // namespace

bool no_offaxis_singularities_algebraic(const SexticModel& model) {
  const Field& k = model.f.field();
  const UniPoly s = model.source.phi1() + model.source.phi2();
  // affine points with y != 0: f_y = 0 forces y^2 = s(x) with s(x) != 0
  const UniPoly fr = reduce_even(model.f, s);
  const UniPoly fxr = reduce_even(model.f.partial(Var::x), s);
  if (fr.is_zero() && fxr.is_zero()) return false;
  if (strip_common(gcd(fr, fxr), s).degree() > 0) return false;
  // points (1:t:0) with t != 0
  UniPoly g(k);
  for (const HomPoly& G : {model.F, model.F.partial(Var::x), model.F.partial(Var::y), model.F.partial(Var::z)}) {
    UniPoly u = G.dehomogenize(Var::x).at_y_zero();
    if (!u.is_zero()) g = g.is_zero() ? u.monic() : gcd(g, u);
  }
  if (g.is_zero()) return false;
  return strip_common(g, UniPoly::x(k)).degree() == 0;
}

bool genus_bound_check(const SingularityType& type) { return 10 - type.total() >= 5; }

bool euler_relation_holds(const HomPoly& F) {
  HomPoly lhs = F.partial(Var::x).times(Var::x) + F.partial(Var::y).times(Var::y) + F.partial(Var::z).times(Var::z);
  return lhs == F.scale(F.field().from_int(F.degree()));
}

}  // namespace howe
