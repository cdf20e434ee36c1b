#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ddseries/zeros.hpp"

namespace ddseries::suite {

enum class Status { Pass, Fail, Skipped };

struct CheckResult {
  int id = 0;
  std::string title;
  Status status = Status::Fail;
  std::string detail;  // achieved residuals, failing sub-checks
  double seconds = 0.0;
};

std::string to_string(Status s);

// The acceptance checks, numbered 1..8. Checks that need zeros are
// skipped when the table is empty; the classifier check then runs on its
// zero-free fixture entries only.
CheckResult check_mu_origin(const zeros::ZeroTable& table);
CheckResult check_lambda_reverse(const zeros::ZeroTable& table);
CheckResult check_oracle_equivalence(const zeros::ZeroTable& table);
CheckResult check_chebyshev(const zeros::ZeroTable& table);
CheckResult check_shift_invariance(const zeros::ZeroTable& table);
CheckResult check_special_functions();
CheckResult check_classifier(const zeros::ZeroTable& table);
CheckResult check_divergence(const zeros::ZeroTable& table);

// Runs all eight in order, writing one line per check as it finishes.
std::vector<CheckResult> run_all(const zeros::ZeroTable& table, std::ostream& out);

// "PASS [3] title (1.2 s): detail"
std::string format_line(const CheckResult& r);

}  // namespace ddseries::suite
