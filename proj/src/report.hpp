#pragma once

#include <string>

#include <json.hpp>

namespace fanodelta {

using ojson = nlohmann::ordered_json;

struct Rendered {
  std::string json;  // canonical document, newline-terminated
  std::string text;  // human-readable report
  std::string csv;   // calabi samples only
  int status = 0;    // nonzero when the computation itself reports a failure (verify)
};

/// Runs `command` on canonical `inputs` (integers as numbers, rationals and
/// delta knowledge as strings, absent optionals as null) and renders both forms.
Rendered run_command(const std::string& command, const ojson& inputs);

/// Re-runs the command recorded in a JSON document and compares the result
/// byte-for-byte. Throws OracleDisagreement on any difference.
Rendered run_check(const std::string& document);

}  // namespace fanodelta
