#include <doctest.h>

#include <algorithm>
#include <random>

#include "howe/unipoly.hpp"
#include "oracles.hpp"

using namespace howe;

namespace {

std::vector<std::int64_t> random_ints(std::mt19937_64& rng, int degree, int bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree + 1));
  for (auto& v : c) v = d(rng);
  if (c.back() == 0) c.back() = 1;
  return c;
}

UniPoly poly(const Field& k, const std::vector<std::int64_t>& c) {
  std::vector<FieldElement> v;
  for (auto x : c) v.push_back(k.from_int(x));
  return UniPoly(k, v);
}

std::vector<mpq_class> mpq(const std::vector<std::int64_t>& c) {
  std::vector<mpq_class> v;
  for (auto x : c) v.emplace_back(static_cast<long>(x));
  return v;
}

}  // namespace

TEST_CASE("construction and evaluation") {
  const Field k = Field::prime(31);
  const std::vector<FieldElement> r = {k.from_int(1), k.from_int(2), k.from_int(3)};
  const UniPoly f = from_roots(k, r);
  CHECK(f == UniPoly::from_ints(k, {-6, 11, -6, 1}));
  for (const auto& x : r) CHECK(f(x).is_zero());
  CHECK(derivative(f) == UniPoly::from_ints(k, {11, -12, 3}));
  CHECK(f.to_string() == "x^3 + 25*x^2 + 11*x + 25");
  CHECK(UniPoly(k).degree() == -1);
  CHECK(f.shift(k.from_int(1)) == from_roots(k, std::vector<FieldElement>{k.zero(), k.one(), k.from_int(2)}));
}

TEST_CASE("division and gcd") {
  const Field q = Field::rational();
  const UniPoly a = UniPoly::from_ints(q, {-1, 0, 0, 1});  // x^3 - 1
  const UniPoly b = UniPoly::from_ints(q, {-1, 0, 1});     // x^2 - 1
  const auto [quot, rem] = divmod(a, b);
  CHECK(quot * b + rem == a);
  CHECK(rem.degree() < b.degree());
  CHECK(gcd(a, b) == UniPoly::from_ints(q, {-1, 1}));
  CHECK(gcd(a, UniPoly(q)) == a.monic());
  CHECK_THROWS_AS(gcd(UniPoly(q), UniPoly(q)), BothZero);
  CHECK_THROWS_AS(divmod(a, UniPoly(q)), DivisionByZero);
}

TEST_CASE("resultant conventions") {
  const Field q = Field::rational();
  CHECK(resultant(UniPoly::from_ints(q, {-2, 1}), UniPoly::from_ints(q, {-5, 1})) == q.from_int(-3));
  const Field k = Field::prime(31);
  CHECK(resultant(UniPoly::from_ints(k, {-2, 1}), UniPoly::from_ints(k, {-5, 1})) == k.from_int(-3));
  CHECK_THROWS_AS(resultant(UniPoly(q), UniPoly::from_ints(q, {1, 1})), ZeroPolynomial);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937_64 rng(11);
  const Field q = Field::rational();
  const Field k = Field::prime(1009);
  for (int t = 0; t < 60; ++t) {
    const int m = 1 + static_cast<int>(rng() % 5), n = 1 + static_cast<int>(rng() % 5);
    const auto f = random_ints(rng, m, 20), g = random_ints(rng, n, 20);
    const mpq_class want = oracle::sylvester_resultant(mpq(f), mpq(g));
    CHECK(resultant(poly(q, f), poly(q, g)) == q.from_rational(want));
    CHECK(resultant(poly(k, f), poly(k, g)) == k.from_rational(want));
  }
}

TEST_CASE("squarefree decomposition") {
  const Field q = Field::rational();
  const UniPoly a = UniPoly::from_ints(q, {1, 1});
  const UniPoly b = UniPoly::from_ints(q, {-2, 0, 1});
  const UniPoly f = a.pow(3) * b * q.from_int(5);
  const auto d = squarefree_decomposition(f);
  REQUIRE(d.size() == 2);
  CHECK(d[0].factor == b);
  CHECK(d[0].multiplicity == 1);
  CHECK(d[1].factor == a);
  CHECK(d[1].multiplicity == 3);
  CHECK(squarefree_part(f) == a * b);

  // p-th powers in characteristic p
  const Field k = Field::prime(5);
  const UniPoly g = UniPoly::from_ints(k, {1, 0, 0, 0, 0, 1}).pow(2) * UniPoly::from_ints(k, {2, 1});  // (x^5 + 1)^2 (x + 2)
  const auto e = squarefree_decomposition(g);
  UniPoly back = UniPoly::constant(g.leading());
  for (const auto& pf : e) back *= pf.factor.pow(static_cast<unsigned>(pf.multiplicity));
  CHECK(back == g);
  CHECK(squarefree_part(g) == UniPoly::from_ints(k, {1, 1}) * UniPoly::from_ints(k, {2, 1}));
}

TEST_CASE("square roots of polynomials") {
  const Field k = Field::prime(31);
  const UniPoly r = UniPoly::from_ints(k, {3, 1, 1});
  CHECK(square_root_up_to_scalar(r * r * k.from_int(3)) == r);
  CHECK(!is_perfect_square(r * r * k.from_int(3)));  // 3 is not a square mod 31
  const auto ps = is_perfect_square(r * r * k.from_int(4));
  REQUIRE(ps);
  CHECK(ps->root == r);
  CHECK(ps->scale == k.from_int(4));
  CHECK(!square_root_up_to_scalar(r * UniPoly::from_ints(k, {1, 1})));
}

TEST_CASE("finite field roots agree with exhaustive search") {
  std::mt19937_64 rng(5);
  const std::uint64_t p = 101;
  const Field k = Field::prime(p);
  for (int t = 0; t < 40; ++t) {
    const auto c = random_ints(rng, 1 + static_cast<int>(rng() % 6), 50);
    const UniPoly f = poly(k, c);
    if (f.degree() < 1) continue;
    std::vector<std::uint64_t> got;
    for (const auto& r : roots(f, 1, 9).roots) got.push_back(r.value.value());
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::roots_mod(c, p));
  }
}

TEST_CASE("roots in extensions") {
  const Field k = Field::prime(31);
  const UniPoly f = UniPoly::from_ints(k, {1, 0, 1}) * UniPoly::from_ints(k, {-4, 1}).pow(2);  // (x^2 + 1)(x - 4)^2
  const RootSet rs = roots(f, 2, 1);
  REQUIRE(rs.roots.size() == 3);
  CHECK(rs.cofactor.degree() == 0);
  int degree_two = 0;
  for (const auto& r : rs.roots) {
    if (r.extension_degree == 1) {
      CHECK(r.value == k.from_int(4));
      CHECK(r.multiplicity == 2);
    } else {
      ++degree_two;
      CHECK(r.minimal_polynomial == UniPoly::from_ints(k, {1, 0, 1}));
      CHECK((r.value * r.value + r.value.field().one()).is_zero());
    }
  }
  CHECK(degree_two == 2);
  CHECK_THROWS_AS(roots(UniPoly::from_ints(Field::rational(), {1, 1}), 1, 0), Unsupported);
}

TEST_CASE("factorization over finite fields") {
  std::mt19937_64 rng(17);
  const Field k = Field::prime(31);
  for (int t = 0; t < 30; ++t) {
    const UniPoly f = poly(k, random_ints(rng, 1 + static_cast<int>(rng() % 9), 15));
    const auto fac = factor_finite(f, 3);
    const auto fac2 = factor_finite(f, 99);
    UniPoly back = UniPoly::constant(f.leading());
    for (const auto& pf : fac) {
      CHECK(is_irreducible(pf.factor));
      back *= pf.factor.pow(static_cast<unsigned>(pf.multiplicity));
    }
    CHECK(back == f);
    REQUIRE(fac.size() == fac2.size());
    for (std::size_t i = 0; i < fac.size(); ++i) CHECK(fac[i].factor == fac2[i].factor);
  }
  CHECK(is_irreducible(UniPoly::from_ints(k, {1, 0, 1})));
  CHECK(!is_irreducible(UniPoly::from_ints(k, {-1, 0, 1})));
}

TEST_CASE("factorization over Q") {
  const Field q = Field::rational();
  const UniPoly f = UniPoly::from_ints(q, {-2, 0, 1}) * UniPoly::from_ints(q, {1, 1}).pow(2) * q.from_int(3);
  const auto r = factor_rational(f);
  CHECK(r.content == 3);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].factor == UniPoly::from_ints(q, {1, 1}));
  CHECK(r.factors[0].multiplicity == 2);
  CHECK(r.factors[1].factor == UniPoly::from_ints(q, {-2, 0, 1}));

  // x^4 + 1 is irreducible over Q but splits modulo every prime
  const auto s = factor_rational(UniPoly::from_ints(q, {1, 0, 0, 0, 1}));
  CHECK(s.factors.size() == 1);

  // (2x - 1)(3x^2 + x + 7) / 5
  const UniPoly g = UniPoly::from_ints(q, {-1, 2}) * UniPoly::from_ints(q, {7, 1, 3}) * q.from_rational(mpq_class(1, 5));
  const auto h = factor_rational(g);
  CHECK(h.content == mpq_class(1, 5));
  REQUIRE(h.factors.size() == 2);
  CHECK(h.factors[0].factor == UniPoly::from_ints(q, {-1, 2}));
  CHECK(h.factors[1].factor == UniPoly::from_ints(q, {7, 1, 3}));
}

TEST_CASE("field embeddings") {
  const Field k = Field::prime(31);
  const Extension e2 = extend(k, 2, 4);
  CHECK(e2.field.degree() == 2);
  CHECK(e2.embedding(k.from_int(7)) == e2.field.from_int(7));
  const Extension e4 = extend(e2.field, 2, 4);
  CHECK(e4.field.degree() == 4);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const FieldElement a = e2.field.random(rng), b = e2.field.random(rng);
    CHECK(e4.embedding(a * b) == e4.embedding(a) * e4.embedding(b));
    CHECK(e4.embedding(a + b) == e4.embedding(a) + e4.embedding(b));
  }
}
