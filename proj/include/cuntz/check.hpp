#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace cuntz {

/// Outcome of one named verification; `detail` carries the counterexample on
/// failure and a short summary on success.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string title;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

inline std::string render(const SuiteReport& r) {
  std::string out = r.title + "\n";
  for (const auto& c : r.checks) {
    out += std::string(c.passed ? "  PASS " : "  FAIL ") + c.name;
    if (!c.detail.empty())
      out += ": " + c.detail;
    out += "\n";
  }
  out += r.passed() ? "verified\n" : "refuted\n";
  return out;
}

} // namespace cuntz
