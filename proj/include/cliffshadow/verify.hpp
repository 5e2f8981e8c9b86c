#pragma once

#include <string>
#include <vector>

namespace cliffshadow {

struct VerifyCheck {
  std::string suite;
  std::string name;
  bool pass;
  std::string measured;
  std::string expected;
};

/// Runs one named oracle suite ("transfer", "channel", "bounds",
/// "estimators") or "all".  Every check compares an independent brute-force
/// or Monte Carlo route against the closed-form implementation.
std::vector<VerifyCheck> run_verify(const std::string& suite, std::uint64_t seed = 20240817);

/// One line per check: suite,name,status,measured,expected.
std::string verify_report(const std::vector<VerifyCheck>& checks);

bool all_passed(const std::vector<VerifyCheck>& checks);

}  // namespace cliffshadow
