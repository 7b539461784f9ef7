#include "howe_cli/examples.hpp"

#include <algorithm>

#include "howe/singular.hpp"

namespace howe::cli {

const std::vector<ReferenceExample>& reference_examples() {
  static const std::vector<ReferenceExample> table = {
      {"I-1", 20, {28, 16, 7, 27},
       {{"c60", 16}, {"c42", 27}, {"c50", 22}, {"c32", 10}, {"c40", 23}, {"c22", 14}, {"c04", 1},
        {"c30", 13}, {"c12", 29}, {"c20", 16}, {"c02", 9}, {"c10", 10}, {"c00", 28}},
       {{"s1-t1", 4}, {"res(h1,h1')", 27}},
       {"(24:0:1)", "(4:0:1)", "(12:0:1)", "(0:1:0)"}},
      {"I-2", 11, {2, 13, 29, 22},
       {{"c60", 18}, {"c42", 27}, {"c50", 25}, {"c32", 30}, {"c40", 24}, {"c22", 27}, {"c04", 1},
        {"c30", 20}, {"c12", 8}, {"c20", 18}, {"c02", 25}, {"c10", 30}, {"c00", 9}},
       {{"s1-t1", 7}, {"res(h1,h1')", 0}, {"res(h1',h1'')", 5}},
       {"(25:0:1)", "(7:0:1)", "(0:1:0)"}},
      {"I-3", 7, {2, 5, 8, 19},
       {{"c60", 16}, {"c42", 27}, {"c50", 26}, {"c32", 20}, {"c40", 26}, {"c22", 13}, {"c04", 1},
        {"c30", 18}, {"c12", 19}, {"c20", 24}, {"c02", 29}, {"c10", 15}, {"c00", 1}},
       {{"s1-t1", 4}, {"res(h1,h1')", 0}, {"res(h1',h1'')", 0}},
       {"(12:0:1)", "(0:1:0)"}},
      {"II-1", 8, {12, 26, 28, 4},
       {{"c42", 27}, {"c32", 1}, {"c40", 4}, {"c22", 8}, {"c04", 1}, {"c30", 14}, {"c12", 6},
        {"c20", 23}, {"c02", 17}, {"c10", 13}, {"c00", 18}},
       {{"s1-t1", 0}, {"s2-t2", 2}, {"disc(h1)", 14}},
       {"(14:0:1)", "(23:0:1)", "(0:1:0)", "(1:0:0)"}},
      {"II-2", 5, {2, 10, 26, 29},
       {{"c42", 27}, {"c32", 20}, {"c40", 19}, {"c22", 17}, {"c04", 1}, {"c30", 22}, {"c12", 12},
        {"c20", 12}, {"c02", 3}, {"c10", 17}, {"c00", 10}},
       {{"s1-t1", 0}, {"s2-t2", 22}, {"disc(h1)", 0}},
       {"(25:0:1)", "(0:1:0)", "(1:0:0)"}},
      {"II-3", 29, {2, 7, 14, 6},
       {{"c42", 27}, {"c32", 23}, {"c22", 4}, {"c04", 1}, {"c12", 30}, {"c20", 28}, {"c02", 4},
        {"c10", 13}, {"c00", 4}},
       {{"s1-t1", 0}, {"s2-t2", 0}, {"s3-t3", 20}},
       {"(28:0:1)", "(0:1:0)", "(1:0:0)"}},
      {"II-4", 2, {8, 20, 24, 12},
       {{"c42", 27}, {"c32", 8}, {"c22", 4}, {"c04", 1}, {"c12", 23}, {"c02", 3}, {"c00", 10}},
       {{"s1-t1", 0}, {"s2-t2", 0}, {"s3-t3", 0}, {"s4-t4", 17}},
       {"(0:1:0)", "(1:0:0)"}},
  };
  return table;
}

std::vector<std::string> verify_example(const ReferenceExample& ex) {
  const Field k = Field::prime(31);
  std::vector<FieldElement> a = {k.from_int(0), k.from_int(1), k.from_int(-1), k.from_int(ex.alpha4)};
  std::vector<FieldElement> b;
  for (int v : ex.betas) b.push_back(k.from_int(v));
  std::vector<std::string> diffs;
  const RamificationData rd = validate(a, b);
  const json r = analyze(rd, {});

  for (const auto& e : sextic_coeffs(rd).ordered()) {
    auto it = ex.coefficients.find(e.name);
    const FieldElement want = k.from_int(it == ex.coefficients.end() ? 0 : it->second);
    if (!(want == e.value))
      diffs.push_back(ex.label + ": " + e.name + " expected " + want.to_string() + ", got " + e.value.to_string());
  }
  const std::string label = r["singularity"]["label"];
  if (label != ex.label) diffs.push_back(ex.label + ": type expected " + ex.label + ", got " + label);
  const json& scalars = r["singularity"]["scalars"];
  for (const auto& [name, v] : ex.scalars) {
    const std::string want = k.from_int(v).to_string();
    if (!scalars.contains(name)) diffs.push_back(ex.label + ": " + name + " not computed");
    else if (scalars[name] != want)
      diffs.push_back(ex.label + ": " + name + " expected " + want + ", got " + scalars[name].get<std::string>());
  }
  std::vector<std::string> got;
  for (const auto& p : r["singular_points"]) got.push_back(p["point"]);
  std::vector<std::string> want = ex.points;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) {
    std::string g, w;
    for (const auto& s : got) g += " " + s;
    for (const auto& s : want) w += " " + s;
    diffs.push_back(ex.label + ": singular points expected {" + w + " }, got {" + g + " }");
  }
  for (const auto& [name, ok] : r["verification"].items())
    if (!ok.get<bool>()) diffs.push_back(ex.label + ": check " + name + " failed");
  if (!r["irreducibility"]["irreducible"].get<bool>()) diffs.push_back(ex.label + ": sextic reported reducible");
  return diffs;
}

}  // namespace howe::cli
