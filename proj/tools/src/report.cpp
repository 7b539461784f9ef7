#include "howe_cli/report.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "howe/irreducible.hpp"
#include "howe/singular.hpp"

namespace howe::cli {

Field parse_field(std::string_view spec) {
  if (spec == "rational" || spec == "Q") return Field::rational();
  if (spec.substr(0, 2) != "p=") throw InvalidField("field must be p=<prime> or rational, got '" + std::string(spec) + "'");
  const std::string digits(spec.substr(2));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19)
    throw InvalidField("invalid prime '" + digits + "'");
  return Field::prime(std::stoull(digits));
}

std::vector<FieldElement> parse_points(const Field& k, std::string_view list) {
  std::vector<FieldElement> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    out.push_back(k.parse(list.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

json printed_scalars(const RamificationData& rd) {
  json s = json::object();
  for (int i = 1; i <= 4; ++i) s["s" + std::to_string(i) + "-t" + std::to_string(i)] = rd.diff(i).to_string();
  const Classification c = classify(rd);
  if (c.res_h1_dh1) s["res(h1,h1')"] = c.res_h1_dh1->to_string();
  if (c.res_dh1_ddh1) s["res(h1',h1'')"] = c.res_dh1_ddh1->to_string();
  if (rd.diff(1).is_zero() && !rd.diff(2).is_zero()) {
    const FieldElement disc = rd.diff(3) * rd.diff(3) - rd.field().from_int(4) * rd.diff(2) * rd.diff(4);
    s["disc(h1)"] = disc.to_string();
  }
  return s;
}

namespace {

json elements(const std::vector<FieldElement>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(e.to_string());
  return a;
}

}  // namespace

json analyze(const RamificationData& rd, const BuildOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const SexticModel model = build_model(rd);
  json r;
  r["schema"] = 1;
  r["input"] = {{"field", rd.field().name()}, {"alpha", elements(rd.alphas)}, {"beta", elements(rd.betas)}, {"seed", opt.seed}};

  json coeffs = json::object();
  for (const auto& e : model.coeffs.ordered()) coeffs[e.name] = e.value.to_string();
  r["coefficients"] = coeffs;
  r["sextic"] = model.f.to_string();

  const Classification cls = classify(rd);
  r["singularity"] = {{"label", cls.type.name()},
                      {"affine", cls.type.affine_count},
                      {"infinity", cls.type.infinity_count},
                      {"total", cls.type.total()},
                      {"scalars", printed_scalars(rd)}};

  const auto points = singular_points(model, opt.seed);
  json pts = json::array();
  int located = 0;
  for (const auto& p : points) {
    json cert = {{"partial", p.certificate.partial}};
    if (p.certificate.value) cert["value"] = p.certificate.value->to_string();
    if (p.certificate.residue) cert["residue"] = p.certificate.residue->to_string();
    json jp = {{"point", p.to_string()}, {"extension_degree", p.extension_degree}, {"count", p.count},
               {"multiplicity", 2}, {"certificate", cert}};
    if (p.minimal_polynomial) jp["minimal_polynomial"] = p.minimal_polynomial->to_string();
    if (p.coords && p.embedding) jp["field"] = p.coords->front().field().describe();
    pts.push_back(jp);
    located += p.count;
  }
  r["singular_points"] = pts;

  const IrreducibilityVerdict v = is_absolutely_irreducible(rd);
  json cases = json::array();
  for (const auto& c : v.cases) cases.push_back({{"label", c.label}, {"a", elements(c.a)}, {"residuals", elements(c.residuals)}});
  json irr = {{"irreducible", v.irreducible}, {"shape_b_cases", cases}, {"shape_a_witness", nullptr}, {"shape_b_witness", nullptr}};
  if (v.shape_a) irr["shape_a_witness"] = {v.shape_a->h1.to_string(), v.shape_a->h2.to_string()};
  if (v.shape_b)
    irr["shape_b_witness"] = {{"label", v.shape_b->label}, {"h1", v.shape_b->h1.to_string()}, {"h2", v.shape_b->h2.to_string()}};
  r["irreducibility"] = irr;

  const UniPoly h = h1_poly(rd);
  const auto k = rd.field();
  r["verification"] = {
      {"assembly_matches", assemble_sextic(rd) == model.f},
      {"c42_c04", model.coeffs.c42 == k.from_int(-4) && model.coeffs.c04.is_one()},
      {"f_x0_equals_h1_squared", model.f.at_y_zero() == h * h},
      {"euler_relation", euler_relation_holds(model.F)},
      {"genus_bound", genus_bound_check(cls.type)},
      {"no_offaxis_singularities", no_offaxis_singularities_algebraic(model)},
      {"point_count_matches_type", located == cls.type.total()},
  };
  if (opt.timing)
    r["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string render_text(const json& r) {
  std::ostringstream os;
  const auto& in = r["input"];
  auto join = [](const json& a) {
    std::string s;
    for (const auto& e : a) s += (s.empty() ? "" : ", ") + e.get<std::string>();
    return s;
  };
  os << "field:        " << in["field"].get<std::string>() << "\n";
  os << "alpha:        " << join(in["alpha"]) << "\n";
  os << "beta:         " << join(in["beta"]) << "\n";
  os << "sextic:       f = " << r["sextic"].get<std::string>() << "\n";
  os << "coefficients:";
  for (const auto& name : {"c60", "c42", "c50", "c32", "c40", "c22", "c04", "c30", "c12", "c20", "c02", "c10", "c00"})
    os << " " << name << "=" << r["coefficients"][name].get<std::string>();
  os << "\n";
  const auto& s = r["singularity"];
  os << "type:         " << s["label"].get<std::string>() << " (m, n) = (" << s["affine"].get<int>() << ", "
     << s["infinity"].get<int>() << "), " << s["total"].get<int>() << " singular points\n";
  for (const auto& [key, val] : s["scalars"].items()) os << "  " << key << " = " << val.get<std::string>() << "\n";
  os << "singular points:\n";
  for (const auto& p : r["singular_points"]) {
    os << "  " << p["point"].get<std::string>() << "  multiplicity 2, " << p["certificate"]["partial"].get<std::string>();
    if (p["certificate"].contains("value")) os << " = " << p["certificate"]["value"].get<std::string>();
    if (p["certificate"].contains("residue")) os << " = " << p["certificate"]["residue"].get<std::string>() << " (mod minimal polynomial)";
    if (p["extension_degree"].get<int>() > 1) os << ", degree " << p["extension_degree"].get<int>();
    if (p["count"].get<int>() > 1) os << ", " << p["count"].get<int>() << " conjugate points";
    os << "\n";
  }
  os << "irreducible:  " << (r["irreducibility"]["irreducible"].get<bool>() ? "yes" : "no") << "\n";
  os << "checks:";
  for (const auto& [key, val] : r["verification"].items()) os << " " << key << "=" << (val.get<bool>() ? "ok" : "FAILED");
  os << "\n";
  if (r.contains("timing_ms")) os << "time:         " << r["timing_ms"].get<double>() << " ms\n";
  return os.str();
}

}  // namespace howe::cli
