#include "howe_cli/commands.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "howe/irreducible.hpp"
#include "howe/singular.hpp"

namespace howe::cli {

namespace {

// Parses field and points; on failure reports to `err` and sets `code`.
std::optional<RamificationData> read_input(const std::string& field, const std::string& alpha, const std::string& beta,
                                           std::ostream& err, int& code) {
  Field k = Field::rational();
  try {
    k = parse_field(field);
  } catch (const InvalidField& e) {
    err << "error: " << e.what() << "\n";
    code = field_error;
    return std::nullopt;
  }
  try {
    auto a = parse_points(k, alpha);
    auto b = parse_points(k, beta);
    if (a.size() != 4 || b.size() != 4) {
      err << "error: expected 4 alpha and 4 beta values, got " << a.size() << " and " << b.size() << "\n";
      code = validation_error;
      return std::nullopt;
    }
    return validate(a, b);
  } catch (const DuplicateRamificationPoint& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: invalid point list: " << e.what() << "\n";
  }
  code = validation_error;
  return std::nullopt;
}

}  // namespace

int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  int code = ok;
  auto rd = read_input(a.field, a.alpha, a.beta, err, code);
  if (!rd) return code;
  const json r = analyze(*rd, {a.seed, a.timing});
  if (a.json) out << r.dump(2) << "\n";
  else out << render_text(r);
  return ok;
}

int cmd_verify_examples(const std::vector<ReferenceExample>& examples, bool as_json, std::ostream& out) {
  json results = json::array();
  std::size_t passed = 0;
  for (const auto& ex : examples) {
    const auto diffs = verify_example(ex);
    if (diffs.empty()) ++passed;
    results.push_back({{"label", ex.label}, {"pass", diffs.empty()}, {"diffs", diffs}});
    if (!as_json) {
      out << ex.label << ": " << (diffs.empty() ? "PASS" : "FAIL") << "\n";
      for (const auto& d : diffs) out << "  " << d << "\n";
    }
  }
  if (as_json) {
    out << json{{"schema", 1}, {"examples", results}, {"passed", passed}, {"total", examples.size()}}.dump(2) << "\n";
  } else {
    out << passed << "/" << examples.size() << " examples match\n";
  }
  return passed == examples.size() ? ok : mismatch;
}

json sample(const Field& k, std::uint64_t count, std::uint64_t seed, unsigned threads) {
  threads = std::max(1u, threads);
  std::map<std::string, std::uint64_t> types;
  std::map<int, std::uint64_t> totals;
  std::uint64_t failures = 0;
  std::mutex mu;
  auto work = [&](unsigned t) {
    std::map<std::string, std::uint64_t> my_types;
    std::map<int, std::uint64_t> my_totals;
    std::uint64_t my_failures = 0;
    for (std::uint64_t i = t; i < count; i += threads) {
      std::mt19937_64 rng(seed ^ i);
      const RamificationData rd = random_ramification(k, rng);
      const SingularityType ty = classify(rd).type;
      ++my_types[ty.name()];
      ++my_totals[ty.total()];
      if (!is_absolutely_irreducible(rd).irreducible) ++my_failures;
    }
    std::lock_guard lock(mu);
    for (const auto& [n, c] : my_types) types[n] += c;
    for (const auto& [n, c] : my_totals) totals[n] += c;
    failures += my_failures;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  json jt = json::object();
  for (auto l : {SingularityLabel::I1, SingularityLabel::I2, SingularityLabel::I3, SingularityLabel::II1,
                 SingularityLabel::II2, SingularityLabel::II3, SingularityLabel::II4}) {
    const std::string n = SingularityType::of(l).name();
    jt[n] = types.count(n) ? types[n] : 0;
  }
  json jtot = json::object();
  for (int n : {2, 3, 4}) jtot[std::to_string(n)] = totals.count(n) ? totals[n] : 0;
  json r = {{"schema", 1},
            {"field", k.name()},
            {"count", count},
            {"seed", seed},
            {"types", jt},
            {"totals", jtot},
            {"irreducibility_failures", failures}};
  r["fraction_four"] = count ? static_cast<double>(totals[4]) / static_cast<double>(count) : 0.0;
  return r;
}

int cmd_sample(const SampleArgs& a, std::ostream& out, std::ostream& err) {
  Field k = Field::rational();
  try {
    k = parse_field(a.field);
  } catch (const InvalidField& e) {
    err << "error: " << e.what() << "\n";
    return field_error;
  }
  const json r = sample(k, a.count, a.seed, a.threads);
  if (a.json) {
    out << r.dump(2) << "\n";
    return ok;
  }
  out << "field " << r["field"].get<std::string>() << ", " << a.count << " samples, seed " << a.seed << "\n";
  for (const auto& [n, c] : r["types"].items()) out << "  " << n << ": " << c.get<std::uint64_t>() << "\n";
  for (const auto& [n, c] : r["totals"].items()) out << "  total " << n << ": " << c.get<std::uint64_t>() << "\n";
  out << "  fraction with 4 singular points: " << r["fraction_four"].get<double>() << "\n";
  out << "  irreducibility failures: " << r["irreducibility_failures"].get<std::uint64_t>() << "\n";
  return ok;
}

json scan(const RamificationData& rd, std::uint64_t budget, std::uint64_t seed) {
  const SexticModel model = build_model(rd);
  std::vector<ProjectivePoint> symbolic;
  for (const auto& p : singular_points(model, seed))
    if (p.coords && !p.embedding) symbolic.push_back(normalize_point(*p.coords));
  std::sort(symbolic.begin(), symbolic.end(), projective_less);
  const auto brute = brute_force_singular_scan(model.F, budget);
  json js = json::array(), jb = json::array();
  for (const auto& p : symbolic) js.push_back(point_string(p));
  for (const auto& p : brute) jb.push_back(point_string(p));
  return {{"schema", 1}, {"field", rd.field().name()}, {"symbolic", js}, {"brute_force", jb}, {"agree", js == jb}};
}

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  int code = ok;
  auto rd = read_input(a.field, a.alpha, a.beta, err, code);
  if (!rd) return code;
  if (!rd->field().is_finite()) {
    err << "error: scan needs a prime field\n";
    return field_error;
  }
  json r;
  try {
    r = scan(*rd, a.budget, a.seed);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return budget_error;
  }
  if (a.json) {
    out << r.dump(2) << "\n";
  } else {
    auto join = [](const json& v) {
      std::string s;
      for (const auto& e : v) s += " " + e.get<std::string>();
      return s;
    };
    out << "located (rational):" << join(r["symbolic"]) << "\n";
    out << "brute force:       " << join(r["brute_force"]) << "\n";
    out << (r["agree"].get<bool>() ? "agree" : "DISAGREE") << "\n";
  }
  return r["agree"].get<bool>() ? ok : mismatch;
}

}  // namespace howe::cli
