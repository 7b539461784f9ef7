#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "howe_cli/examples.hpp"
#include "howe_cli/report.hpp"

namespace howe::cli {

enum ExitCode : int { ok = 0, mismatch = 1, field_error = 2, validation_error = 3, budget_error = 4 };

struct BuildArgs {
  std::string field;
  std::string alpha;
  std::string beta;
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 0;
};
int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err);

int cmd_verify_examples(const std::vector<ReferenceExample>& examples, bool as_json, std::ostream& out);

struct SampleArgs {
  std::string field;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool json = false;
};
/// Distribution summary; seeds per instance are seed ^ index.
json sample(const Field& k, std::uint64_t count, std::uint64_t seed, unsigned threads);
int cmd_sample(const SampleArgs& a, std::ostream& out, std::ostream& err);

struct ScanArgs {
  std::string field;
  std::string alpha;
  std::string beta;
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;
  bool json = false;
};
/// Brute-force points vs. the rational part of the located points.
json scan(const RamificationData& rd, std::uint64_t budget, std::uint64_t seed);
int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err);

}  // namespace howe::cli
