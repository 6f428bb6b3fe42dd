#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hssnt {

struct Check {
  std::string name;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string name;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  void add(std::string check, double residual, double tol) {
    checks.push_back({std::move(check), residual, tol, residual <= tol});
  }
  void append(const VerifyReport& other) {
    for (const Check& c : other.checks) checks.push_back({other.name + ": " + c.name, c.max_residual, c.tol, c.pass});
  }
  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace hssnt
