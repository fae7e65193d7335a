#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "loopforge/loop.hpp"
#include "loopforge/suites.hpp"
#include "loopforge/varieties.hpp"

namespace loopforge {

// Report schema:
//   { "loop": <name>, "order": n,
//     "properties": { name: {"holds": bool, "witness": [..]|"..."|null} },
//     "suites": { name: {"passed": n, "failed": n, "first_failure": ...} } }
nlohmann::ordered_json report_json(const std::string& loop_name,
                                   const CayleyLoop& L,
                                   const PropertyReport& report,
                                   const std::vector<SuiteResult>& suites = {});

// dump(2) plus a trailing newline; the byte-stable form used for goldens.
std::string report_string(const nlohmann::ordered_json& j);

}  // namespace loopforge
