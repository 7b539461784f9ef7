#include "howe/irreducible.hpp"

#include <set>

namespace howe {

bool ShapeBCase::vanishes() const {
  for (const auto& q : residuals)
    if (!q.is_zero()) return false;
  return true;
}

void check_sextic_shape(const BiPoly& f) {
  static const std::set<std::pair<int, int>> allowed = {{6, 0}, {5, 0}, {4, 2}, {4, 0}, {3, 2}, {3, 0}, {2, 2},
                                                        {2, 0}, {1, 2}, {1, 0}, {0, 4}, {0, 2}, {0, 0}};
  for (const auto& [e, c] : f.terms())
    if (!allowed.count(e))
      throw UnsupportedShape("unexpected monomial x^" + std::to_string(e.first) + "*y^" + std::to_string(e.second));
  const Field& k = f.field();
  if (!(f.coeff(4, 2) == k.from_int(-4))) throw UnsupportedShape("coefficient of x^4*y^2 must be -4");
  if (!f.coeff(0, 4).is_one()) throw UnsupportedShape("coefficient of y^4 must be 1");
  if (f.at_y_zero().is_zero()) throw UnsupportedShape("f(x, 0) vanishes identically");
}

namespace {

std::optional<FieldElement> rational_sqrt(const FieldElement& v) {
  if (!v.is_square()) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v.rational().get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.rational().get_den_mpz_t());
  return v.field().from_rational(mpq_class(n, d));
}

// Square roots of all values in a common field: the base field, or its
// quadratic extension for finite fields. Returns the embedding used.
std::pair<std::vector<FieldElement>, std::optional<FieldEmbedding>> common_roots(const std::vector<FieldElement>& vals,
                                                                                 std::uint64_t seed) {
  const Field& k = vals.front().field();
  std::vector<FieldElement> out;
  if (!k.is_finite()) {
    for (const auto& v : vals) {
      auto r = rational_sqrt(v);
      if (!r) throw Unsupported(v.to_string() + " is not a square in Q");
      out.push_back(*r);
    }
    return {out, std::nullopt};
  }
  bool all_square = true;
  for (const auto& v : vals) all_square = all_square && v.is_square();
  if (all_square) {
    for (const auto& v : vals) out.push_back((*v.sqrt())[0]);
    return {out, std::nullopt};
  }
  Extension ext = extend(k, 2, seed);
  for (const auto& v : vals) out.push_back((*ext.embedding(v).sqrt())[0]);
  return {out, ext.embedding};
}

BiPoly y2_plus(const UniPoly& q) { return BiPoly::monomial(q.field().one(), 0, 2) + BiPoly::from_x(q); }

struct ShapeBInput {
  BiPoly ft;  // translated sextic
  FieldElement r3, r6;
  std::optional<FieldElement> r4;  // needed when r3 = 0
};

ShapeBResult run_cases(const ShapeBInput& in) {
  const BiPoly& f = in.ft;
  const Field& k = f.field();
  auto c = [&](int i, int j) { return f.coeff(i, j); };
  const FieldElement two = k.from_int(2), four = k.from_int(4);
  ShapeBResult res;
  const int signs[4][2] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
  for (int idx = 0; idx < 4; ++idx) {
    const FieldElement s1 = k.from_int(signs[idx][0]), s2 = k.from_int(signs[idx][1]);
    const FieldElement a6 = s2 * in.r6;
    FieldElement a3 = k.zero(), a4 = k.zero();
    std::string label;
    if (!in.r3.is_zero()) {
      a3 = s1 * in.r3;
      a4 = c(5, 0) / (two * a3);
      label = "B" + std::to_string(idx + 1);
    } else {
      a4 = s1 * *in.r4;
      label = "B0-" + std::to_string(idx + 1);
    }
    const FieldElement a1 = -(c(3, 2) - two * a3) / four;
    const FieldElement a2 = (two * a4 - a1 * a1 - c(2, 2)) / four;
    const FieldElement a5 = c(1, 0) / (two * a6);
    std::vector<FieldElement> q = {
        two * a3 * a5 + a4 * a4 - c(4, 0),
        two * a3 * a6 + two * a4 * a5 - c(3, 0),
        -two * a1 * a2 + two * a5 - c(1, 2),
        two * a4 * a6 + a5 * a5 - c(2, 0),
        -a2 * a2 + two * a6 - c(0, 2),
    };
    ShapeBCase cs{label, {a1, a2, a3, a4, a5, a6}, std::move(q)};
    if (!res.witness && cs.vanishes()) {
      const UniPoly Q(k, {a2, a1, two});
      const UniPoly P(k, {a6, a5, a4, a3});
      BiPoly h1 = BiPoly::monomial(k.one(), 0, 2) + BiPoly::from_x(Q, 1) + BiPoly::from_x(P);
      BiPoly h2 = BiPoly::monomial(k.one(), 0, 2) - BiPoly::from_x(Q, 1) + BiPoly::from_x(P);
      if (h1 * h2 == f) res.witness = ShapeBWitness{label, cs.a, std::move(h1), std::move(h2)};
    }
    res.cases.push_back(std::move(cs));
  }
  return res;
}

// Moves a witness found for f(x + c, y) back to f.
void shift_back(ShapeBResult& res, const FieldElement& c) {
  if (!res.witness) return;
  auto& w = *res.witness;
  w.h1 = w.h1.shift_x(-c);
  w.h2 = w.h2.shift_x(-c);
  const UniPoly Q = w.h1.coefficient_in_y(1), P = w.h1.coefficient_in_y(0);
  w.a = {Q.coeff(1), Q.coeff(0), P.coeff(3), P.coeff(2), P.coeff(1), P.coeff(0)};
}

}  // namespace

std::optional<ShapeAWitness> shape_a_test(const RamificationData& rd) {
  const Field& k = rd.field();
  const UniPoly p1 = rd.phi1(), p2 = rd.phi2();
  // discriminant of z^2 + B z + C with B = -2(phi1 + phi2), C = (phi1 - phi2)^2
  auto r = square_root_up_to_scalar(p1 * p2);
  if (!r) return std::nullopt;
  const UniPoly B = (p1 + p2) * k.from_int(-2);
  const UniPoly sq = *r * k.from_int(4);
  const FieldElement half = k.from_int(2).inv();
  ShapeAWitness w{y2_plus((B + sq) * half), y2_plus((B - sq) * half)};
  if (!(w.h1 * w.h2 == assemble_sextic(rd))) return std::nullopt;
  return w;
}

std::optional<ShapeAWitness> shape_a_test(const BiPoly& f, std::uint64_t seed) {
  check_sextic_shape(f);
  const Field& k = f.field();
  const UniPoly B = f.coefficient_in_y(2), C = f.at_y_zero();
  const UniPoly D = B * B - C * k.from_int(4);
  if (D.is_zero()) {
    const UniPoly q = B * k.from_int(2).inv();
    ShapeAWitness w{y2_plus(q), y2_plus(q)};
    if (!(w.h1 * w.h2 == f)) return std::nullopt;
    return w;
  }
  auto r = square_root_up_to_scalar(D);
  if (!r) return std::nullopt;
  auto [roots, emb] = common_roots({D.leading()}, seed);
  const BiPoly fe = emb ? f.embed(*emb) : f;
  const UniPoly Be = emb ? (*emb)(B) : B;
  const UniPoly re = emb ? (*emb)(*r) : *r;
  const Field& ke = fe.field();
  const UniPoly sq = re * roots[0];
  const FieldElement half = ke.from_int(2).inv();
  ShapeAWitness w{y2_plus((Be + sq) * half), y2_plus((Be - sq) * half)};
  if (!(w.h1 * w.h2 == fe)) return std::nullopt;
  return w;
}

ShapeBResult shape_b_test(const RamificationData& rd) {
  const FieldElement c = rd.alphas[0];
  const RamificationData t = translate(rd, -c);
  ShapeBInput in{sextic_coeffs(t).to_bipoly(), t.diff(1), t.diff(4), t.diff(2)};
  ShapeBResult res = run_cases(in);
  res.shift = c;
  shift_back(res, c);
  return res;
}

ShapeBResult shape_b_test(const BiPoly& f, std::uint64_t seed) {
  check_sextic_shape(f);
  const Field& k = f.field();
  const UniPoly C = f.at_y_zero();
  FieldElement c = k.zero();
  for (std::int64_t i = 0;; ++i) {
    if (i > 2 * C.degree() + 2) throw Unsupported("no point with f(c, 0) != 0 among small integers");
    // 0, 1, -1, 2, -2, ...
    c = k.from_int(i % 2 ? (i + 1) / 2 : -(i / 2));
    if (!C(c).is_zero()) break;
  }
  BiPoly ft = f.shift_x(c);
  std::vector<FieldElement> vals = {ft.coeff(6, 0), ft.coeff(0, 0)};
  if (vals[0].is_zero()) vals.push_back(ft.coeff(4, 0));
  auto [roots, emb] = common_roots(vals, seed);
  if (emb) ft = ft.embed(*emb);
  ShapeBInput in{ft, roots[0], roots[1], std::nullopt};
  if (roots.size() > 2) in.r4 = roots[2];
  ShapeBResult res = run_cases(in);
  const FieldElement ce = emb ? (*emb)(c) : c;
  res.shift = ce;
  shift_back(res, ce);
  return res;
}

IrreducibilityVerdict is_absolutely_irreducible(const RamificationData& rd) {
  auto a = shape_a_test(rd);
  auto b = shape_b_test(rd);
  const bool irr = !a && !b.witness;
  return {irr, std::move(a), std::move(b.witness), std::move(b.cases)};
}

IrreducibilityVerdict is_absolutely_irreducible(const BiPoly& f, std::uint64_t seed) {
  auto a = shape_a_test(f, seed);
  if (a) return {false, std::move(a), std::nullopt, {}};
  auto b = shape_b_test(f, seed);
  const bool irr = !a && !b.witness;
  return {irr, std::move(a), std::move(b.witness), std::move(b.cases)};
}

}  // namespace howe
