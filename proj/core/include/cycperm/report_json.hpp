#pragma once

#include <string>
#include <string_view>

#include "cycperm/autgroup.hpp"

namespace cycperm {

/// Canonical JSON form of a report. Orders are decimal strings, permutations
/// image arrays, absent optionals null.
std::string report_to_json(const VerificationReport& report, int indent = 2);

/// Inverse of report_to_json; throws SyntaxError on malformed input.
VerificationReport report_from_json(std::string_view text);

}  // namespace cycperm
