#pragma once

#include <string>
#include <vector>

namespace coxjsj {

/// Pass/fail evidence from a list of named checks. A failing check carries a
/// witness describing what went wrong.
class VerificationReport {
 public:
  struct Check {
    std::string name;
    bool passed = false;
    std::string witness;
  };

  void add(std::string name, bool passed, std::string witness = {});
  /// Appends the checks of `other`, prefixing their names.
  void merge(const VerificationReport& other, const std::string& prefix = {});

  const std::vector<Check>& checks() const { return checks_; }
  /// Conjunction of all checks; true for an empty report.
  bool passed() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace coxjsj
