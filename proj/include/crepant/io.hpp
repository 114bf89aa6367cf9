#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "crepant/screening.hpp"

namespace crepant {

// Parsed input file: exactly one of cone / polytope, plus an optional search
// budget. Vectors may be written as JSON integers or, for values beyond
// 64 bits, as quoted decimal strings.
struct InputDocument {
  std::optional<Cone> cone;
  std::optional<LatticePolytope> polytope;
  std::optional<std::int64_t> budget;
};

// Throws Error(ParseError) with a position-bearing message on malformed JSON
// or schema violations; geometry validation errors propagate with their codes.
InputDocument parse_input(const std::string& text);

struct CommandOptions {
  // <0 means "not given"; resolution order is explicit > file > fallback >
  // library default.
  std::int64_t explicit_budget = -1;
  std::int64_t fallback_budget = -1;        // e.g. from the environment
  std::int64_t fallback_point_budget = -1;  // e.g. from the environment
  bool verbose = false;
  bool exhaustive = false;  // `triangulate` only
};

struct CommandResult {
  std::string document;        // serialized report, newline-terminated
  bool budget_limited = false; // verdict/status was capped by a budget
};

// Runs one CLI-level command ("screen", "points", "volume", "bound",
// "fvector", "triangulate") against a parsed input. Stage commands on cone
// inputs work on the support polytope and reject non-Gorenstein cones;
// `screen` reports those as a completed non-Gorenstein verdict instead.
CommandResult run_command(const std::string& command, const InputDocument& input,
                          const CommandOptions& options);

// Report serialization used by `screen` (and the C API accessor).
std::string report_document(const ScreeningReport& report, bool verbose);

// Verdict string including the "non_gorenstein" terminal outcome.
std::string verdict_string(const ScreeningReport& report);

}  // namespace crepant
