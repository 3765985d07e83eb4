#pragma once

#include "json.hpp"

#include "cycperm/autgroup.hpp"

namespace cycperm::detail {

nlohmann::json report_value(const VerificationReport& report);
VerificationReport report_from_value(const nlohmann::json& j);

}  // namespace cycperm::detail
