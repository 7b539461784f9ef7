#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "howe/field.hpp"
#include "howe/sextic.hpp"

namespace howe::cli {

using nlohmann::json;

/// "p=31" or "rational" (also "Q"). Throws InvalidField.
Field parse_field(std::string_view spec);
/// Comma-separated field elements, e.g. "0,1,-1,20". Throws
/// std::invalid_argument on malformed text.
std::vector<FieldElement> parse_points(const Field& k, std::string_view list);

struct BuildOptions {
  std::uint64_t seed = 0;
  bool timing = false;
};

/// Full analysis of one input. Keys are sorted; identical input and options
/// give identical output unless timing is requested.
json analyze(const RamificationData& rd, const BuildOptions& opt);
std::string render_text(const json& report);

/// Scalars printed alongside an example: "s1-t1", "res(h1,h1')", ...
json printed_scalars(const RamificationData& rd);

}  // namespace howe::cli
