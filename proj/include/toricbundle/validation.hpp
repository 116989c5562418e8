#pragma once

#include <string>
#include <vector>

namespace toricbundle {

/// Outcome of one named validity rule. `detail` cites the first offending item.
struct CheckResult {
  std::string rule;
  bool passed = true;
  std::string detail;
  std::size_t failures = 0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool valid() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }

  CheckResult& rule(const std::string& name) {
    for (auto& c : checks)
      if (c.rule == name) return c;
    checks.push_back(CheckResult{name, true, {}, 0});
    return checks.back();
  }

  /// Records a violation of `name`; only the first detail is kept.
  void fail(const std::string& name, const std::string& detail) {
    CheckResult& c = rule(name);
    if (c.passed) c.detail = detail;
    c.passed = false;
    ++c.failures;
  }
};

}  // namespace toricbundle
