#include "loopforge/report.hpp"

namespace loopforge {

nlohmann::ordered_json report_json(const std::string& loop_name,
                                   const CayleyLoop& L,
                                   const PropertyReport& report,
                                   const std::vector<SuiteResult>& suites) {
  nlohmann::ordered_json j;
  j["loop"] = loop_name;
  j["order"] = L.order();
  nlohmann::ordered_json props = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.entries) {
    nlohmann::ordered_json p;
    p["holds"] = value.holds;
    if (value.witness)
      p["witness"] = *value.witness;
    else if (!value.note.empty() && !value.holds)
      p["witness"] = value.note;
    else
      p["witness"] = nullptr;
    props[name] = std::move(p);
  }
  j["properties"] = std::move(props);
  nlohmann::ordered_json su = nlohmann::ordered_json::object();
  for (const SuiteResult& s : suites) {
    nlohmann::ordered_json e;
    e["passed"] = s.passed;
    e["failed"] = s.failed;
    if (s.first_failure.empty())
      e["first_failure"] = nullptr;
    else
      e["first_failure"] = s.first_failure;
    su[s.name] = std::move(e);
  }
  j["suites"] = std::move(su);
  return j;
}

std::string report_string(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

}  // namespace loopforge
