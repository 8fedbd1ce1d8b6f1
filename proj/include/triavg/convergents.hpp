#pragma once

// Continued fraction of sqrt 3 = [1; 1, 2, 1, 2, ...] and the bisection
// u_n = z_{2n+1} of its convergent numerators.

#include <cstddef>
#include <vector>

#include "triavg/exactnum.hpp"
#include "triavg/report.hpp"

namespace triavg {

/// Index 0 is the seed 1/0, so numerators run 1, 1, 2, 5, 7, 19, 26, 71, ...
/// (denominators 0, 1, 1, 3, 4, 11, 15, 41, ...).
struct Convergent {
  BigInt p;
  BigInt q;
  std::size_t idx;
};

std::vector<Convergent> cf_sqrt3(std::size_t count);

/// n-th convergent numerator z_n.
BigInt z(std::size_t n);

/// u_n = z_{2n+1} for 0 <= n <= max_n.
IdentityReport check_bisection(std::size_t max_n);

/// u_n - u_{n-1} = L_n = 2 z_{2n} = z_{2n+1} - z_{2n-1} for 1 <= n <= max_n.
IdentityReport check_difference_identities(std::size_t max_n);

/// For the convergents up to index 2 max_n + 1: |p^2 - 3q^2| in {1, 2},
/// gcd(p, q) = 1, p > 0, z_{2m} = L_m / 2 (L_m even), and
/// z_{2m+1} = 2 z_{2m} + z_{2m-1}.
IdentityReport check_convergent_laws(std::size_t max_n);

}  // namespace triavg
