#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "triavg/exactnum.hpp"

namespace triavg {

struct IdentityFailure {
  std::size_t n;
  std::string relation;  // which equality of the chain broke
  BigInt lhs;
  BigInt rhs;
};

/// Outcome of checking one identity family over [first_n, last_n].
/// Failures are ordered by n.
struct IdentityReport {
  std::string identity_name;
  std::size_t first_n = 0;
  std::size_t last_n = 0;
  std::vector<IdentityFailure> failures;

  bool passed() const { return failures.empty(); }

  /// Records a failure when lhs != rhs. Returns whether they matched.
  bool expect_equal(std::size_t n, std::string relation, const BigInt& lhs, const BigInt& rhs) {
    if (lhs == rhs) return true;
    failures.push_back({n, std::move(relation), lhs, rhs});
    return false;
  }
};

}  // namespace triavg
