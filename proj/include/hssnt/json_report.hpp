#pragma once

#include <json.hpp>

#include <string>

#include "hssnt/report.hpp"
#include "hssnt/space.hpp"

namespace hssnt {

inline constexpr const char* kReportSchema = "hssnt-report/1";

// Pretty JSON with every float printed as %.17g; non-finite values become strings.
std::string dump17(const nlohmann::json& j, int indent = 2);

nlohmann::json describe_json(const Space& s);
nlohmann::json report_json(const VerifyReport& r, const std::string& space);

}  // namespace hssnt
