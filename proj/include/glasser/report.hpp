#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "glasser/kernel.hpp"

namespace glasser {

/// One JSON record:
/// {"case", "params": {name: {"re","im"}}, "lhs": {"re","im"}, "rhs",
///  "abs_diff", "rel_diff", "pass", "evaluations", "truncation",
///  "experimental"}.
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);

/// Table with 9 significant digits; notes follow their row.
void write_table(std::ostream& out, const std::vector<VerificationReport>& reports);

/// "RE", "RE+IMi", "IMi" ("i" alone means 1i). Throws InputError.
Complex parse_complex_literal(std::string_view text);

std::string format_complex(Complex z, int digits = 9);

}  // namespace glasser
