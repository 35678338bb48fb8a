#ifndef SMIRNOV_IO_HPP
#define SMIRNOV_IO_HPP

#include <string>
#include <vector>

#include "smirnov/inequalities.hpp"
#include "smirnov/poly.hpp"

namespace smirnov {

/// Shared polynomial text format: JSON array of [re, im] pairs in ascending
/// powers, e.g. z^2 + 1 as [[1,0],[0,0],[1,0]].
Polynomial parse_polynomial_json(const std::string& text);
std::string polynomial_to_json(const Polynomial& p);

/// One JSON object per report with the CheckReport field names; deterministic
/// field order and double formatting.
std::string report_to_json(const CheckReport& rep);
std::string reports_to_json(const std::vector<CheckReport>& reps);

/// CSV with one row per report; header matches the CheckReport field order,
/// with complex fields flattened into _re/_im columns.
std::string reports_to_csv(const std::vector<CheckReport>& reps);

}  // namespace smirnov

#endif
