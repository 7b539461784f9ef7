#include <doctest.h>

#include <algorithm>
#include <random>

#include "howe/irreducible.hpp"
#include "howe/singular.hpp"

using namespace howe;

namespace {

const Field F31 = Field::prime(31);

RamificationData data(const Field& k, std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  std::vector<FieldElement> av, bv;
  for (auto v : a) av.push_back(k.from_int(v));
  for (auto v : b) bv.push_back(k.from_int(v));
  return validate(av, bv);
}

RamificationData example(std::int64_t alpha4, std::vector<std::int64_t> betas) { return data(F31, {0, 1, -1, alpha4}, betas); }

const UniPoly h1_i1 = UniPoly::from_ints(F31, {11, 23, 26, 4});

}  // namespace

TEST_CASE("extension fields") {
  const Field e = build_extension(5, 2, 3);
  CHECK(e.order() == 25);
  const UniPoly m(Field::prime(5), {Field::prime(5).from_int(static_cast<std::int64_t>(e.modulus()[0])),
                                    Field::prime(5).from_int(static_cast<std::int64_t>(e.modulus()[1])),
                                    Field::prime(5).one()});
  for (std::int64_t x = 0; x < 5; ++x) CHECK(!m(Field::prime(5).from_int(x)).is_zero());

  const Extension e3 = extend(F31, 3, 1);
  CHECK(e3.field.order() == 29791);
  for (std::int64_t r : {4, 12, 24}) CHECK(e3.embedding(h1_i1)(e3.field.from_int(r)).is_zero());
}

TEST_CASE("polynomials from the first example") {
  const UniPoly phi1 = from_roots(F31, std::vector<FieldElement>{F31.zero(), F31.one(), F31.from_int(-1), F31.from_int(20)});
  CHECK(phi1 == UniPoly::from_ints(F31, {0, 20, 30, 11, 1}));
  CHECK(from_roots(F31, std::vector<FieldElement>{}) == UniPoly::constant(F31.one()));
  CHECK(derivative(h1_i1) == UniPoly::from_ints(F31, {23, 21, 12}));
  CHECK(h1_poly(example(20, {28, 16, 7, 27})) == h1_i1);
  CHECK(gcd(h1_i1, derivative(h1_i1)).is_one());
  CHECK(resultant(h1_i1, derivative(h1_i1)) == F31.from_int(27));
  const RootSet rs = roots(h1_i1, 3, 5);
  REQUIRE(rs.roots.size() == 3);
  std::vector<std::uint64_t> r;
  for (const auto& x : rs.roots) {
    CHECK(x.multiplicity == 1);
    CHECK(x.extension_degree == 1);
    r.push_back(x.value.value());
  }
  std::sort(r.begin(), r.end());
  CHECK(r == std::vector<std::uint64_t>{4, 12, 24});
}

TEST_CASE("symmetric functions of the first example") {
  const RamificationData rd = example(20, {28, 16, 7, 27});
  const std::vector<std::int64_t> sigma = {20, 30, 11, 0}, tau = {16, 25, 19, 11};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rd.sigma[i] == F31.from_int(sigma[i]));
    CHECK(rd.tau[i] == F31.from_int(tau[i]));
  }
}

TEST_CASE("second example: repeated root of h1") {
  const RamificationData rd = example(11, {2, 13, 29, 22});
  const UniPoly h = h1_poly(rd);
  CHECK(resultant(derivative(h), derivative(derivative(h))) == F31.from_int(5));
  const UniPoly s = squarefree_part(h);
  CHECK(s.degree() == 2);
  CHECK(s(F31.from_int(25)).is_zero());
  CHECK(s(F31.from_int(7)).is_zero());
}

TEST_CASE("small gcd, squarefree and root examples") {
  const Field q = Field::rational();
  const UniPoly a = UniPoly::from_ints(q, {-1, 1}), b = UniPoly::from_ints(q, {-2, 1}), c = UniPoly::from_ints(q, {-3, 1});
  CHECK(gcd(a * a * b, a * c) == a);
  CHECK(squarefree_part(a * a * b) == a * b);
  CHECK(factor_rational(UniPoly::from_ints(q, {-2, 0, 1})).factors.size() == 1);

  const Field f7 = Field::prime(7);
  const RootSet rs = roots(UniPoly::from_ints(f7, {1, 0, 1}), 2, 1);
  REQUIRE(rs.roots.size() == 2);
  for (const auto& r : rs.roots) CHECK(r.extension_degree == 2);
  CHECK(roots(UniPoly::from_ints(f7, {1, 0, 1}), 1, 1).roots.empty());
  CHECK(!Field::prime(7).from_int(3).sqrt());
}

TEST_CASE("phi1 phi2 is never a square") {
  std::mt19937_64 rng(3);
  for (const Field& k : {F31, Field::prime(1009), Field::rational()})
    for (int t = 0; t < 20; ++t) {
      const RamificationData rd = random_ramification(k, rng);
      CHECK(!square_root_up_to_scalar(rd.phi1() * rd.phi2()));
    }
}

TEST_CASE("sextics of the first and last examples") {
  CHECK(build_model(example(20, {28, 16, 7, 27})).f.to_string() ==
        "16*x^6 + 27*x^4*y^2 + 22*x^5 + 10*x^3*y^2 + 23*x^4 + 14*x^2*y^2 + y^4 + 13*x^3 + 29*x*y^2 + 16*x^2 + 9*y^2 + 10*x + 28");
  CHECK(build_model(example(2, {8, 20, 24, 12})).f.to_string() == "27*x^4*y^2 + 8*x^3*y^2 + 4*x^2*y^2 + y^4 + 23*x*y^2 + 3*y^2 + 10");
}

TEST_CASE("partial derivatives and the line y = 0") {
  std::mt19937_64 rng(9);
  for (const Field& k : {F31, Field::rational()}) {
    const RamificationData rd = random_ramification(k, rng);
    const SexticModel m = build_model(rd);
    const BiPoly y = BiPoly::monomial(k.one(), 0, 1);
    const BiPoly s = BiPoly::from_x(rd.phi1() + rd.phi2());
    CHECK(m.f.partial(Var::y) == (y * y * y).scale(k.from_int(4)) - (s * y).scale(k.from_int(4)));
    // F(x, 0, z) is the square of the cubic form of h1
    const UniPoly h = h1_poly(rd);
    HomPoly H(k, 3);
    for (int i = 0; i <= h.degree(); ++i) H.add_term(i, 0, 3 - i, h.coeff(i));
    HomPoly F0(k, 6);
    for (const auto& [e, c] : m.F.terms())
      if (e[1] == 0) F0.add_term(e[0], 0, e[2], c);
    HomPoly sq(k, 6);
    for (const auto& [e1, c1] : H.terms())
      for (const auto& [e2, c2] : H.terms()) sq.add_term(e1[0] + e2[0], 0, e1[2] + e2[2], c1 * c2);
    CHECK(F0 == sq);
  }
}

TEST_CASE("Mobius normalization examples") {
  const RamificationData rd = example(20, {28, 16, 7, 27});
  const Normalization n = mobius_normalize(rd);
  CHECK(n.transform == MobiusTransform::identity(F31));
  CHECK(n.triple == std::array<int, 3>{0, 1, 2});

  const RamificationData other = data(F31, {5, 7, 11, 13}, {17, 19, 23, 29});
  const Normalization m = mobius_normalize(other);
  CHECK(m.triple == std::array<int, 3>{0, 1, 2});
  CHECK(m.data.alphas[0].is_zero());
  CHECK(m.data.alphas[1].is_one());
  CHECK(m.data.alphas[2] == F31.from_int(-1));
  const RamificationData back = apply_mobius(m.data, m.transform.inverse());
  CHECK(back.alphas == other.alphas);
  CHECK(back.betas == other.betas);
}

TEST_CASE("lift examples") {
  const RamificationData rd = example(20, {28, 16, 7, 27});
  const SexticModel m = build_model(rd);
  // h1(4) = 0, so phi1(4) = phi2(4); y = 0 has two lifts when phi1(4) != 0
  const FieldElement x = F31.from_int(4);
  REQUIRE(rd.phi1()(x) == rd.phi2()(x));
  REQUIRE(!rd.phi1()(x).is_zero());
  try {
    lift_point(m, x, F31.zero(), 1);
    FAIL("expected an ambiguous lift");
  } catch (const IndeterminateLift& e) {
    REQUIRE(e.candidates().size() == 2);
    CHECK(e.candidates()[0].y1 == -e.candidates()[0].y2);
    CHECK(e.candidates()[0].y1 == -e.candidates()[1].y1);
  }
}

TEST_CASE("genus of the fiber product") {
  CHECK(genus_of_howe(1, 1, 0) == 5);
  CHECK(genus_of_howe(2, 2, 4) == 5);
}

TEST_CASE("type table") {
  struct Row {
    SingularityLabel l;
    int m, n, total;
  };
  for (const auto& r : std::vector<Row>{{SingularityLabel::I1, 3, 1, 4}, {SingularityLabel::I2, 2, 1, 3}, {SingularityLabel::I3, 1, 1, 2},
                                        {SingularityLabel::II1, 2, 2, 4}, {SingularityLabel::II2, 1, 2, 3}, {SingularityLabel::II3, 1, 2, 3},
                                        {SingularityLabel::II4, 0, 2, 2}}) {
    const auto t = SingularityType::of(r.l);
    CHECK(t.affine_count == r.m);
    CHECK(t.infinity_count == r.n);
    CHECK(t.total() == r.total);
  }
}

TEST_CASE("certificates") {
  const RamificationData i1 = example(20, {28, 16, 7, 27});
  for (const auto& p : singular_points(build_model(i1), 0)) {
    if (p.kind == SingularPoint::Kind::y_infinity) {
      CHECK(p.certificate.partial == "F_zz");
      CHECK(*p.certificate.value == F31.from_int(2));
    }
    if (p.kind == SingularPoint::Kind::affine && (*p.coords)[0] == F31.from_int(24)) {
      CHECK(p.certificate.partial == "F_yy");
      CHECK(*p.certificate.value == F31.from_int(-8) * i1.phi1()(F31.from_int(24)));
    }
  }
  const RamificationData ii1 = example(8, {12, 26, 28, 4});
  bool seen = false;
  for (const auto& p : singular_points(build_model(ii1), 0))
    if (p.kind == SingularPoint::Kind::x_infinity) {
      seen = true;
      CHECK(p.certificate.partial == "F_yy");
      CHECK(*p.certificate.value == F31.from_int(-8));
    }
  CHECK(seen);

  const RamificationData i3 = example(7, {2, 5, 8, 19});
  const auto pts = singular_points(build_model(i3), 0);
  const FieldElement xi = i3.diff(2) / (F31.from_int(3) * i3.diff(1));
  CHECK((*pts.front().coords)[0] == xi);
  CHECK(xi == F31.from_int(12));
}

TEST_CASE("shape B verdict is translation invariant") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 20; ++t) {
    const RamificationData rd = random_ramification(Field::prime(1009), rng);
    const RamificationData moved = translate(rd, rd.field().random(rng));
    CHECK(shape_b_test(rd).witness.has_value() == shape_b_test(moved).witness.has_value());
    CHECK(shape_b_test(build_model(moved).f, 1).witness.has_value() == false);
  }
}

TEST_CASE("shape B witness recovers the chosen coefficients") {
  const Field k = Field::prime(1009);
  const std::vector<std::int64_t> a = {3, -5, 7, 2, -4, 9};
  const BiPoly y2 = BiPoly::monomial(k.one(), 0, 2);
  const BiPoly Q = BiPoly::from_x(UniPoly::from_ints(k, {a[1], a[0], 2}), 1);
  const BiPoly P = BiPoly::from_x(UniPoly::from_ints(k, {a[5], a[4], a[3], a[2]}));
  const BiPoly f = (y2 + Q + P) * (y2 - Q + P);
  const ShapeBResult r = shape_b_test(f, 4);
  REQUIRE(r.witness);
  const bool same = (r.witness->h1 == y2 + Q + P && r.witness->h2 == y2 - Q + P) ||
                    (r.witness->h1 == y2 - Q + P && r.witness->h2 == y2 + Q + P);
  CHECK(same);
}
