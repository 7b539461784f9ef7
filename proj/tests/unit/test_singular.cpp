#include <doctest.h>

#include <random>
#include <set>

#include "howe/singular.hpp"
#include "oracles.hpp"

using namespace howe;

namespace {

RamificationData data(const Field& k, std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  std::vector<FieldElement> av, bv;
  for (auto v : a) av.push_back(k.from_int(v));
  for (auto v : b) bv.push_back(k.from_int(v));
  return validate(av, bv);
}

std::vector<std::int64_t> ints(const std::vector<FieldElement>& v) {
  std::vector<std::int64_t> out;
  for (const auto& e : v) out.push_back(static_cast<std::int64_t>(e.value()));
  return out;
}

std::set<oracle::Point> rational_points(const std::vector<SingularPoint>& pts) {
  std::set<oracle::Point> out;
  for (const auto& p : pts) {
    if (!p.coords || p.embedding) continue;
    const auto n = normalize_point(*p.coords);
    out.insert({n[0].value(), n[1].value(), n[2].value()});
  }
  return out;
}

struct Example {
  const char* label;
  std::int64_t alpha4;
  std::vector<std::int64_t> betas;
};

const std::vector<Example> examples = {
    {"I-1", 20, {28, 16, 7, 27}}, {"I-2", 11, {2, 13, 29, 22}}, {"I-3", 7, {2, 5, 8, 19}},
    {"II-1", 8, {12, 26, 28, 4}}, {"II-2", 5, {2, 10, 26, 29}}, {"II-3", 29, {2, 7, 14, 6}},
    {"II-4", 2, {8, 20, 24, 12}},
};

}  // namespace

TEST_CASE("type names and counts") {
  CHECK(SingularityType::of(SingularityLabel::I1).name() == "I-1");
  CHECK(SingularityType::of(SingularityLabel::I1).total() == 4);
  CHECK(SingularityType::of(SingularityLabel::I3).total() == 2);
  CHECK(SingularityType::of(SingularityLabel::II1).total() == 4);
  CHECK(SingularityType::of(SingularityLabel::II4).total() == 2);
  CHECK(parse_label("II-3") == SingularityLabel::II3);
  CHECK(!parse_label("III-1"));
  CHECK(genus_bound_check(SingularityType::of(SingularityLabel::I1)));
}

TEST_CASE("classification of the F_31 examples") {
  const Field k = Field::prime(31);
  for (const auto& ex : examples) {
    CAPTURE(ex.label);
    const RamificationData rd = data(k, {0, 1, -1, ex.alpha4}, ex.betas);
    const Classification c = classify(rd);
    CHECK(c.type.name() == ex.label);
    CHECK(build_model(rd).f.at_y_zero() == h1_poly(rd) * h1_poly(rd));
  }
  const Classification i1 = classify(data(k, {0, 1, -1, 20}, {28, 16, 7, 27}));
  CHECK(i1.res_h1_dh1 == k.from_int(27));
  const Classification i2 = classify(data(k, {0, 1, -1, 11}, {2, 13, 29, 22}));
  CHECK(i2.res_h1_dh1 == k.zero());
  CHECK(i2.res_dh1_ddh1 == k.from_int(5));
}

TEST_CASE("located points agree with an exhaustive scan of the plane") {
  const Field k = Field::prime(31);
  for (const auto& ex : examples) {
    CAPTURE(ex.label);
    const RamificationData rd = data(k, {0, 1, -1, ex.alpha4}, ex.betas);
    const SexticModel m = build_model(rd);
    const auto pts = singular_points(m, 0);
    const auto ref = oracle::singular_points(oracle::sextic(31, ints(rd.alphas), ints(rd.betas)));
    CHECK(rational_points(pts) == ref);
    int total = 0;
    for (const auto& p : pts) total += p.count;
    CHECK(total == classify(rd).type.total());
  }
}

TEST_CASE("random instances: branch logic, points and scans") {
  std::mt19937_64 rng(4);
  for (std::uint64_t p : {31ULL, 37ULL, 41ULL}) {
    const Field k = Field::prime(p);
    for (int t = 0; t < 20; ++t) {
      const RamificationData rd = random_ramification(k, rng);
      const SexticModel m = build_model(rd);
      const UniPoly h = h1_poly(rd);
      const int m_expected = h.is_zero() ? 0 : h.degree() - (h.degree() > 0 ? gcd(h, derivative(h)).degree() : 0);
      const Classification c = classify(rd);
      CHECK(c.type.affine_count == m_expected);
      CHECK(c.type.infinity_count == (rd.diff(1).is_zero() ? 2 : 1));
      const auto pts = singular_points(m, 7);
      const auto ref = oracle::singular_points(oracle::sextic(p, ints(rd.alphas), ints(rd.betas)));
      CHECK(rational_points(pts) == ref);
      std::set<oracle::Point> scanned;
      for (const auto& q : brute_force_singular_scan(m.F)) scanned.insert({q[0].value(), q[1].value(), q[2].value()});
      CHECK(scanned == ref);
      for (const auto& q : ref) CHECK((q[1] == 0 || q[2] == 0));
      CHECK(no_offaxis_singularities_algebraic(m));
      CHECK(no_offaxis_singularities_check(m.F));
      CHECK(euler_relation_holds(m.F));
    }
  }
}

TEST_CASE("points over extensions and over Q") {
  std::mt19937_64 rng(12);
  const Field k = Field::prime(31);
  int seen_extension = 0;
  for (int t = 0; t < 200 && seen_extension == 0; ++t) {
    const RamificationData rd = random_ramification(k, rng);
    const auto pts = singular_points(build_model(rd), 3);
    for (const auto& p : pts)
      if (p.extension_degree > 1) {
        ++seen_extension;
        REQUIRE(p.coords);
        REQUIRE(p.minimal_polynomial);
        CHECK(p.minimal_polynomial->degree() == p.extension_degree);
        CHECK(p.embedding);
        CHECK(!p.certificate.value->is_zero());
      }
  }
  CHECK(seen_extension > 0);

  const Field q = Field::rational();
  for (int t = 0; t < 10; ++t) {
    const RamificationData rd = random_ramification(q, rng);
    const SexticModel m = build_model(rd);
    const auto pts = singular_points(m, 0);
    int total = 0;
    for (const auto& p : pts) {
      total += p.count;
      if (!p.coords) {
        REQUIRE(p.minimal_polynomial);
        CHECK(p.certificate.residue);
        CHECK(!p.certificate.residue->is_zero());
      }
    }
    CHECK(total == classify(rd).type.total());
    CHECK(no_offaxis_singularities_algebraic(m));
  }
}

TEST_CASE("multiplicity certificates reject bad points") {
  const Field k = Field::prime(31);
  const SexticModel m = build_model(data(k, {0, 1, -1, 20}, {28, 16, 7, 27}));
  SingularPoint bogus{SingularPoint::Kind::affine, std::vector<FieldElement>{k.from_int(5), k.zero(), k.one()}, 1,
                      std::nullopt, 1, std::nullopt, {}};
  CHECK_THROWS_AS(verify_multiplicity_two(m.F, bogus), NotSingular);

  HomPoly cusp(k, 3);  // x^3 + y^3 has a triple point at the origin
  cusp.add_term(3, 0, 0, k.one());
  cusp.add_term(0, 3, 0, k.one());
  SingularPoint origin{SingularPoint::Kind::affine, std::vector<FieldElement>{k.zero(), k.zero(), k.one()}, 1,
                       std::nullopt, 1, std::nullopt, {}};
  CHECK_THROWS_AS(verify_multiplicity_two(cusp, origin), MultiplicityExceedsTwo);
}

TEST_CASE("normalized projective points") {
  const Field k = Field::prime(31);
  const auto p = normalize_point({k.from_int(4), k.zero(), k.from_int(2)});
  CHECK(point_string(p) == "(2:0:1)");
  CHECK(point_string(normalize_point({k.from_int(3), k.from_int(6), k.zero()})) == "(16:1:0)");
  CHECK(point_string(normalize_point({k.from_int(3), k.zero(), k.zero()})) == "(1:0:0)");
  CHECK(projective_less(normalize_point({k.from_int(9), k.zero(), k.one()}), normalize_point({k.zero(), k.one(), k.zero()})));
  CHECK(projective_less(normalize_point({k.zero(), k.one(), k.zero()}), normalize_point({k.one(), k.zero(), k.zero()})));
}

TEST_CASE("scan budget and threads") {
  const Field big = Field::prime(1009);
  const SexticModel m = build_model(data(big, {0, 1, 2, 3}, {4, 5, 6, 7}));
  CHECK_THROWS_AS(brute_force_singular_scan(m.F), BudgetExceeded);
  const Field k = Field::prime(41);
  const SexticModel s = build_model(data(k, {0, 1, -1, 8}, {12, 26, 28, 4}));
  CHECK(brute_force_singular_scan(s.F, 1000000, 1) == brute_force_singular_scan(s.F, 1000000, 4));
  CHECK_THROWS_AS(brute_force_singular_scan(build_model(data(Field::rational(), {0, 1, 2, 3}, {4, 5, 6, 7})).F), Unsupported);
}
