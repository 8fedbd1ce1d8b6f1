#pragma once

// Range checks of the identities and congruences linking L, F, a, b, u, v.
// Each check compares quantities obtained along different evaluation paths
// (iteration vs. closed form) and reports failures instead of throwing.

#include <cstddef>
#include <string_view>
#include <vector>

#include "triavg/report.hpp"

namespace triavg {

/// L_n^2 = L_{2n} + 2 and L_n L_{n+1} = L_{2n+1} + 4.
IdentityReport check_lucas_identities(std::size_t max_n);

/// 1 + 12 a_n + 12 a_n^2 = L_{2n+1}/2 - 1 = u_n^2.
IdentityReport check_discriminant(std::size_t max_n);

/// u_n odd, L_{2n+1} = 0 (mod 4), v_n = 3 (mod 6).
IdentityReport check_congruences(std::size_t max_n);

/// b_n = (u_n - 3)/2, a_n = (v_n - 3)/6, u_n - u_{n-1} = L_n,
/// v_n - v_{n-1} = 6 F_n.
IdentityReport check_linkages(std::size_t max_n);

/// v_n^2 = 3(u_n^2 + 2) = 3(L_{2n+1} + 2)/2 = 3(11 + 12 b_n + 4 b_n^2).
IdentityReport check_v_square(std::size_t max_n);

/// Every check above plus the convergent suites, in a fixed order.
std::vector<IdentityReport> run_all(std::size_t max_n);

/// Suite names accepted by run_suite: the report names plus "all".
const std::vector<std::string_view>& suite_names();

/// Runs one named suite, or all of them for "all". Throws
/// std::invalid_argument for an unknown name.
std::vector<IdentityReport> run_suite(std::string_view name, std::size_t max_n);

}  // namespace triavg
