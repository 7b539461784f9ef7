// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "howe/irreducible.hpp"
#include "howe/singular.hpp"
#include "howe_cli/commands.hpp"
#include "oracles.hpp"

using namespace howe;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Instance {
  RamificationData rd;
  SexticModel model;
};

const std::vector<Instance>& instances() {
  static const std::vector<Instance> all = [] {
    std::vector<Instance> v;
    std::mt19937_64 rng(20260);
    for (const Field& k : {Field::prime(31), Field::prime(1009), Field::rational()})
      for (int i = 0; i < 1000; ++i) {
        RamificationData rd = random_ramification(k, rng);
        SexticModel m = build_model(rd);
        v.push_back({std::move(rd), std::move(m)});
      }
    return v;
  }();
  return all;
}

RamificationData example_data(const cli::ReferenceExample& ex) {
  const Field k = Field::prime(31);
  std::vector<FieldElement> a = {k.from_int(0), k.from_int(1), k.from_int(-1), k.from_int(ex.alpha4)}, b;
  for (int v : ex.betas) b.push_back(k.from_int(v));
  return validate(a, b);
}

std::vector<std::int64_t> ints(const std::vector<FieldElement>& v) {
  std::vector<std::int64_t> out;
  for (const auto& e : v) out.push_back(static_cast<std::int64_t>(e.value()));
  return out;
}

std::string where(const RamificationData& rd) {
  std::string s = rd.field().name() + " alpha=";
  for (const auto& a : rd.alphas) s += a.to_string() + ",";
  s += " beta=";
  for (const auto& b : rd.betas) s += b.to_string() + ",";
  return s;
}

Outcome criterion1() {
  Outcome o;
  std::ostringstream out;
  if (cli::cmd_verify_examples(cli::reference_examples(), false, out) != cli::ok) o.fail(out.str());
  // the two printed resultants, checked on their own
  const auto& ex = cli::reference_examples();
  const Classification i1 = classify(example_data(ex[0])), i2 = classify(example_data(ex[1]));
  const Field k = Field::prime(31);
  if (!(i1.res_h1_dh1 == k.from_int(27))) o.fail("Res(h1,h1') for I-1 is not 27");
  if (!(i2.res_dh1_ddh1 == k.from_int(5))) o.fail("Res(h1',h1'') for I-2 is not 5");
  if (o.pass) o.detail = "7/7 examples, resultants 27 and 5";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& in : instances()) {
    const Field& k = in.rd.field();
    if (!(assemble_sextic(in.rd) == in.model.f)) o.fail("assembly differs: " + where(in.rd));
    if (!(in.model.coeffs.c42 == k.from_int(-4)) || !in.model.coeffs.c04.is_one()) o.fail("c42/c04: " + where(in.rd));
  }
  if (o.pass) o.detail = "3000 instances over F_31, F_1009, Q";
  return o;
}

BiPoly y2(const Field& k) { return BiPoly::monomial(k.one(), 0, 2); }

Outcome criterion3() {
  Outcome o;
  for (const auto& in : instances()) {
    if (shape_a_test(in.rd)) o.fail("shape A witness: " + where(in.rd));
    if (shape_b_test(in.rd).witness) o.fail("shape B witness: " + where(in.rd));
    if (in.rd.field().is_finite() && !is_absolutely_irreducible(in.model.f, 1).irreducible)
      o.fail("generic test found a factor: " + where(in.rd));
  }
  int detected = 0;
  // shape A: (y^2 + x^2 + 1)(y^2 - 4x^4 + 1)
  for (const Field& k : {Field::prime(31), Field::prime(1009), Field::rational()}) {
    const BiPoly one = BiPoly::monomial(k.one(), 0, 0);
    const BiPoly f = (y2(k) + BiPoly::monomial(k.one(), 2, 0) + one) * (y2(k) - BiPoly::monomial(k.from_int(4), 4, 0) + one);
    const auto w = shape_a_test(f, 1);
    if (!w || !(w->h1 * w->h2 == f)) o.fail("shape A product missed over " + k.name());
    else ++detected;
  }
  // shape B: (y^2 + Qy + P)(y^2 - Qy + P)
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(-30, 30);
  for (const Field& k : {Field::prime(31), Field::prime(1009)})
    for (int t = 0; t < 50; ++t) {
      std::vector<std::int64_t> a(6);
      for (auto& v : a) v = d(rng);
      const BiPoly Q = BiPoly::from_x(UniPoly::from_ints(k, {a[1], a[0], 2}), 1);
      const BiPoly P = BiPoly::from_x(UniPoly::from_ints(k, {a[5], a[4], a[3], a[2]}));
      const BiPoly f = (y2(k) + Q + P) * (y2(k) - Q + P);
      if (f.at_y_zero().is_zero()) continue;
      const ShapeBResult r = shape_b_test(f, 3);
      if (!r.witness || !(r.witness->h1 * r.witness->h2 == f)) o.fail("shape B product missed over " + k.name() + ": " + f.to_string());
      else ++detected;
    }
  if (o.pass) o.detail = "no witness on 3000 instances; " + std::to_string(detected) + " synthetic products factored";
  return o;
}

std::set<oracle::Point> located_rational(const std::vector<SingularPoint>& pts) {
  std::set<oracle::Point> out;
  for (const auto& p : pts) {
    if (!p.coords || p.embedding) continue;
    const auto n = normalize_point(*p.coords);
    out.insert({n[0].value(), n[1].value(), n[2].value()});
  }
  return out;
}

Outcome criterion4() {
  Outcome o;
  for (const auto& in : instances()) {
    const UniPoly h = h1_poly(in.rd);
    const int want = h.is_zero() || h.degree() == 0 ? 0 : h.degree() - gcd(h, derivative(h)).degree();
    if (classify(in.rd).type.affine_count != want) o.fail("affine count: " + where(in.rd));
  }
  int scanned = 0;
  auto compare = [&](const RamificationData& rd) {
    const SexticModel m = build_model(rd);
    const auto ref = oracle::singular_points(oracle::sextic(rd.field().characteristic(), ints(rd.alphas), ints(rd.betas)));
    if (located_rational(singular_points(m, 0)) != ref) o.fail("scan disagrees: " + where(rd));
    std::set<oracle::Point> lib;
    for (const auto& p : brute_force_singular_scan(m.F)) lib.insert({p[0].value(), p[1].value(), p[2].value()});
    if (lib != ref) o.fail("library scan disagrees with oracle: " + where(rd));
    ++scanned;
  };
  for (const auto& ex : cli::reference_examples()) compare(example_data(ex));
  std::mt19937_64 rng(41);
  const std::vector<std::uint64_t> primes = {31, 37, 41};
  for (int t = 0; t < 100; ++t) compare(random_ramification(Field::prime(primes[static_cast<std::size_t>(t) % 3]), rng));
  if (o.pass) o.detail = "3000 branch checks; " + std::to_string(scanned) + " plane scans agree";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t points = 0;
  for (const auto& in : instances()) {
    const auto& F = in.model.F;
    const auto type = classify(in.rd).type;
    int total = 0;
    for (const auto& p : singular_points(in.model, 0)) {
      total += p.count;
      ++points;
      try {
        const Certificate c = verify_multiplicity_two(F, p);
        const bool nonzero = (c.value && !c.value->is_zero()) || (c.residue && !c.residue->is_zero());
        if (!nonzero) o.fail("zero certificate: " + where(in.rd));
      } catch (const Error& e) {
        o.fail(std::string(e.what()) + ": " + where(in.rd));
      }
      if (p.coords) {
        const auto& c = *p.coords;
        if (!c[1].is_zero() && !c[2].is_zero()) o.fail("singular point off the axes: " + where(in.rd));
      }
    }
    if (total != type.total()) o.fail("located " + std::to_string(total) + " points for " + type.name() + ": " + where(in.rd));
    if (total < 2 || total > 4) o.fail("total outside {2,3,4}: " + where(in.rd));
    if (!no_offaxis_singularities_algebraic(in.model)) o.fail("off-axis singularity: " + where(in.rd));
    if (in.rd.field().characteristic() == 31 && !no_offaxis_singularities_check(F)) o.fail("scan found off-axis point: " + where(in.rd));
    if (!euler_relation_holds(F)) o.fail("Euler relation: " + where(in.rd));
    if (!genus_bound_check(type) || 10 - total < 5) o.fail("genus bound: " + where(in.rd));
  }
  if (o.pass) o.detail = std::to_string(points) + " certified points on 3000 instances";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const cli::json r = cli::sample(Field::prime(10007), 10000, 6, 4);
  const double frac = r["fraction_four"].get<double>();
  std::ostringstream s;
  s << "fraction with 4 points " << std::setprecision(4) << frac << " over 10000 samples";
  o.detail = s.str();
  if (!(frac > 0.99)) o.fail(s.str());
  if (r["irreducibility_failures"].get<int>() != 0) o.fail("irreducibility failure while sampling");
  return o;
}

Outcome criterion7() {
  Outcome o;
  int round_trips = 0, indeterminate = 0;
  std::mt19937_64 rng(7);
  for (const auto& ex : cli::reference_examples()) {
    const RamificationData rd = example_data(ex);
    const SexticModel m = build_model(rd);
    for (int t = 0; t < 100; ++t) {
      const auto P = random_fiber_point(rd, rng);
      if (!P) {
        o.fail("no fiber point for " + ex.label);
        break;
      }
      const auto [x, y] = fiber_to_plane(*P);
      try {
        const FiberPoint Q = lift_point(m, x, y, 1);
        if (!(Q.x == P->x && Q.y1 == P->y1 && Q.y2 == P->y2)) o.fail("round trip changed a point of " + ex.label);
        ++round_trips;
      } catch (const IndeterminateLift& e) {
        bool found = false;
        for (const auto& c : e.candidates()) found = found || (c.y1 == P->y1 && c.y2 == P->y2);
        if (!found) o.fail("candidates miss the original point of " + ex.label);
        ++indeterminate;
      }
    }
    // an off-curve input: shift y until f(x, y) != 0
    const Field& k = rd.field();
    FieldElement y = k.one();
    while (m.f.eval(k.from_int(2), y).is_zero()) y += k.one();
    try {
      lift_point(m, k.from_int(2), y, 1);
      o.fail("off-curve point lifted for " + ex.label);
    } catch (const NotOnCurve&) {
    }
  }
  if (o.pass)
    o.detail = std::to_string(round_trips) + " round trips, " + std::to_string(indeterminate) +
               " ambiguous lifts, off-curve inputs rejected";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "built-in F_31 examples reproduced exactly", 1, criterion1},
      {2, "assembly equals coefficient formulas", 10, criterion2},
      {3, "irreducibility tests", 30, criterion3},
      {4, "classification vs. oracles", 60, criterion4},
      {5, "multiplicity and structure invariants", 30, criterion5},
      {6, "genericity of four singular points", 60, criterion6},
      {7, "fiber product round trip", 5, criterion7},
  };
  instances();  // built once, outside the timed sections
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(c.limit_s) + " s");
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << std::fixed
              << std::setprecision(2) << s << " s) " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
