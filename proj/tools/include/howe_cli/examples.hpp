#pragma once

#include <map>
#include <string>
#include <vector>

#include "howe_cli/report.hpp"

namespace howe::cli {

/// One worked example over F_31 with alphas (0, 1, -1, alpha4).
struct ReferenceExample {
  std::string label;
  int alpha4;
  std::vector<int> betas;
  std::map<std::string, int> coefficients;  // "c60" .. "c00", zero entries omitted
  std::map<std::string, int> scalars;       // see printed_scalars
  std::vector<std::string> points;          // "(24:0:1)", "(0:1:0)", ...
};

const std::vector<ReferenceExample>& reference_examples();

/// Human-readable differences between an example and a fresh analysis; empty
/// when everything matches.
std::vector<std::string> verify_example(const ReferenceExample& ex);

}  // namespace howe::cli
