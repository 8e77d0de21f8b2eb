#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hitchin {

struct Check {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  std::string detail;
};

/// Ordered list of named checks; the order is the order they were run.
class CheckReport {
 public:
  void add(Check check) { checks_.push_back(std::move(check)); }
  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), passed, {}, {}, std::move(detail)});
  }
  /// Records expected/actual as strings and passes iff they match.
  void expect_equal(std::string name, const std::string& expected, const std::string& actual) {
    checks_.push_back({std::move(name), expected == actual, expected, actual, {}});
  }
  void append(const CheckReport& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool passed() const;
  std::vector<Check> failures() const;
  const Check* find(const std::string& name) const;

  nlohmann::json to_json() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace hitchin
