#pragma once

// Canonical JSON rendering: keys sorted, two-space indentation, floats printed
// with 17 significant digits. Re-parsing the output and writing it again
// reproduces the same bytes.

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>

namespace qseries::cli {

void write_canonical_json(const nlohmann::json& value, std::ostream& out);

std::string canonical_json(const nlohmann::json& value);

/// Finite values as JSON numbers; +/-infinity and NaN as the strings "inf", "-inf", "nan".
nlohmann::json float_value(double value);

}  // namespace qseries::cli
