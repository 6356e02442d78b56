#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieosc/matrix.hpp"

namespace lieosc {

/// Outcome of one verified identity.
struct CheckResult {
  std::string identity;     // stable slug, e.g. "quadratic-relation"
  std::string description;  // human-readable statement of what was checked
  bool pass = false;
  Surd max_residual;        // largest residual entry; zero when exact
  std::size_t checked = 0;  // number of relations / entries / index tuples
  std::optional<std::size_t> interior_columns;
  std::string detail;       // offending indices or computed values
};

struct Report {
  std::string subject;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckResult> checks;

  bool passed() const;
  void merge(const Report& other);
  void param(const std::string& key, const std::string& value) { parameters.emplace_back(key, value); }

  /// Records a check whose residual is the given matrix.
  CheckResult& expect_zero(const std::string& identity, const std::string& description, const Matrix& residual,
                           std::size_t checked = 1);
  /// Records a scalar equality lhs == rhs.
  CheckResult& expect_equal(const std::string& identity, const std::string& description, const Surd& lhs,
                            const Surd& rhs);
  CheckResult& expect(const std::string& identity, const std::string& description, bool ok,
                      const std::string& detail = {});

  const CheckResult* find(const std::string& identity) const;
};

/// Accumulates many residuals under one identity: tracks the largest entry and
/// the first failure.
class ResidualTally {
 public:
  void add(const Matrix& residual, const std::string& where);
  void add(const Surd& residual, const std::string& where);
  CheckResult& commit(Report& report, const std::string& identity, const std::string& description) const;
  std::size_t count() const { return count_; }
  bool clean() const { return first_failure_.empty(); }

 private:
  Surd worst_;
  double worst_mag_ = 0.0;
  std::size_t count_ = 0;
  std::string first_failure_;
};

}  // namespace lieosc
