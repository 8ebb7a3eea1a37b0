#include "coxjsj/report.hpp"

#include <algorithm>

namespace coxjsj {

void VerificationReport::add(std::string name, bool passed, std::string witness) {
  checks_.push_back({std::move(name), passed, std::move(witness)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.witness});
}

bool VerificationReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

}  // namespace coxjsj
