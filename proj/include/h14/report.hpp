#pragma once

#include <string>
#include <utility>
#include <vector>

namespace h14 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Ordered list of named checks plus free-form informational lines.
struct Report {
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> info;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void note(std::string key, std::string value) { info.emplace_back(std::move(key), std::move(value)); }
  void append(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    info.insert(info.end(), o.info.begin(), o.info.end());
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace h14
