#include "lieosc/report.hpp"

#include <algorithm>

namespace lieosc {

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Report::merge(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

CheckResult& Report::expect_zero(const std::string& identity, const std::string& description, const Matrix& residual,
                                 std::size_t checked) {
  CheckResult c;
  c.identity = identity;
  c.description = description;
  c.max_residual = residual.max_entry();
  c.pass = c.max_residual.is_zero();
  c.checked = checked;
  checks.push_back(std::move(c));
  return checks.back();
}

CheckResult& Report::expect_equal(const std::string& identity, const std::string& description, const Surd& lhs,
                                  const Surd& rhs) {
  CheckResult c;
  c.identity = identity;
  c.description = description;
  c.max_residual = lhs - rhs;
  c.pass = c.max_residual.is_zero();
  c.checked = 1;
  c.detail = "computed " + lhs.to_string() + ", expected " + rhs.to_string();
  checks.push_back(std::move(c));
  return checks.back();
}

CheckResult& Report::expect(const std::string& identity, const std::string& description, bool ok,
                            const std::string& detail) {
  CheckResult c;
  c.identity = identity;
  c.description = description;
  c.pass = ok;
  c.checked = 1;
  c.detail = detail;
  checks.push_back(std::move(c));
  return checks.back();
}

const CheckResult* Report::find(const std::string& identity) const {
  for (const auto& c : checks)
    if (c.identity == identity) return &c;
  return nullptr;
}

void ResidualTally::add(const Matrix& residual, const std::string& where) { add(residual.max_entry(), where); }

void ResidualTally::add(const Surd& residual, const std::string& where) {
  ++count_;
  if (residual.is_zero()) return;
  double m = residual.magnitude();
  if (m >= worst_mag_ || worst_.is_zero()) {
    worst_mag_ = m;
    worst_ = residual;
  }
  if (first_failure_.empty()) first_failure_ = where;
}

CheckResult& ResidualTally::commit(Report& report, const std::string& identity, const std::string& description) const {
  CheckResult c;
  c.identity = identity;
  c.description = description;
  c.max_residual = worst_;
  c.pass = first_failure_.empty();
  c.checked = count_;
  if (!c.pass) c.detail = "first failure at " + first_failure_;
  report.checks.push_back(std::move(c));
  return report.checks.back();
}

}  // namespace lieosc
