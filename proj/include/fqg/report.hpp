#pragma once

#include <string>
#include <vector>

#include "fqg/types.hpp"

namespace fqg {

struct Check {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<Check> checks;

  void add(const std::string& name, double residual, double threshold) {
    checks.push_back({name, residual, threshold, residual <= threshold});
  }
  void add_bool(const std::string& name, bool ok) {
    checks.push_back({name, ok ? 0.0 : 1.0, 0.0, ok});
  }
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string summary() const;
};

class ValidationError : public Error {
 public:
  ValidationError(const std::string& msg, ValidationReport rep)
      : Error(msg + "\n" + rep.summary()), report(std::move(rep)) {}
  ValidationReport report;
};

}  // namespace fqg
