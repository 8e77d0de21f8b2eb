#include "hitchin/report.hpp"

#include <algorithm>

namespace hitchin {

bool CheckReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::vector<Check> CheckReport::failures() const {
  std::vector<Check> out;
  std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out), [](const Check& c) { return !c.passed; });
  return out;
}

const Check* CheckReport::find(const std::string& name) const {
  const auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.expected.empty() || !c.actual.empty()) {
      j["expected"] = c.expected;
      j["actual"] = c.actual;
    }
    if (!c.detail.empty()) j["detail"] = c.detail;
    list.push_back(std::move(j));
  }
  return {{"passed", passed()}, {"checks", std::move(list)}};
}

}  // namespace hitchin
