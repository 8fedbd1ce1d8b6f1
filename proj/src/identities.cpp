#include "triavg/identities.hpp"

#include <stdexcept>
#include <string>

#include "triavg/convergents.hpp"
#include "triavg/recurrences.hpp"

namespace triavg {
namespace {

void require_range(std::size_t max_n, const char* what) {
  if (max_n < 1) throw std::domain_error(std::string(what) + " requires max_n >= 1");
}

}  // namespace

IdentityReport check_lucas_identities(std::size_t max_n) {
  require_range(max_n, "check_lucas_identities");
  IdentityReport report{"lucas", 0, max_n, {}};
  const RecurrenceSpec lucas_spec = spec_of(Named::L);
  const auto lucas = sequence_prefix(Named::L, max_n + 2);
  for (std::size_t n = 0; n <= max_n; ++n) {
    // Right-hand sides through the closed form, left-hand sides by iteration.
    report.expect_equal(n, "L_n^2 = L_{2n} + 2", BigInt(lucas[n] * lucas[n]),
                        BigInt(eval_closed_form(lucas_spec, 2 * n) + 2));
    report.expect_equal(n, "L_n L_{n+1} = L_{2n+1} + 4", BigInt(lucas[n] * lucas[n + 1]),
                        BigInt(eval_closed_form(lucas_spec, 2 * n + 1) + 4));
  }
  return report;
}

IdentityReport check_discriminant(std::size_t max_n) {
  require_range(max_n, "check_discriminant");
  IdentityReport report{"discriminant", 0, max_n, {}};
  const auto a = sequence_prefix(Named::A, max_n + 1);
  const auto lucas = sequence_prefix(Named::L, 2 * max_n + 2);
  for (std::size_t n = 0; n <= max_n; ++n) {
    const BigInt lhs = 1 + 12 * a[n] + 12 * a[n] * a[n];
    const BigInt& l_odd = lucas[2 * n + 1];
    if (!report.expect_equal(n, "L_{2n+1} even", BigInt(floor_mod(l_odd, 2)), 0)) continue;
    const BigInt mid = l_odd / 2 - 1;
    const BigInt u = eval_u(n);
    report.expect_equal(n, "1 + 12a_n + 12a_n^2 = L_{2n+1}/2 - 1", lhs, mid);
    report.expect_equal(n, "L_{2n+1}/2 - 1 = u_n^2", mid, BigInt(u * u));
  }
  return report;
}

IdentityReport check_congruences(std::size_t max_n) {
  require_range(max_n, "check_congruences");
  IdentityReport report{"congruences", 0, max_n, {}};
  const auto u = sequence_prefix(Named::U, max_n + 1);
  const auto v = sequence_prefix(Named::V, max_n + 1);
  const auto lucas = sequence_prefix(Named::L, 2 * max_n + 2);
  for (std::size_t n = 0; n <= max_n; ++n) {
    report.expect_equal(n, "u_n mod 2 = 1", BigInt(floor_mod(u[n], 2)), 1);
    report.expect_equal(n, "L_{2n+1} mod 4 = 0", BigInt(floor_mod(lucas[2 * n + 1], 4)), 0);
    report.expect_equal(n, "v_n mod 6 = 3", BigInt(floor_mod(v[n], 6)), 3);
  }
  return report;
}

IdentityReport check_linkages(std::size_t max_n) {
  require_range(max_n, "check_linkages");
  IdentityReport report{"linkages", 0, max_n, {}};
  const auto a = sequence_prefix(Named::A, max_n + 1);
  const auto b = sequence_prefix(Named::B, max_n + 1);
  const auto u = sequence_prefix(Named::U, max_n + 1);
  const auto v = sequence_prefix(Named::V, max_n + 1);
  const auto f = sequence_prefix(Named::F, max_n + 1);
  const auto lucas = sequence_prefix(Named::L, max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    // u_n and v_n through their closed forms, a_n and b_n by their own recurrences.
    const BigInt u_closed = eval_u(n);
    const BigInt v_closed = eval_v(n);
    const BigInt u3 = u_closed - 3;
    if (report.expect_equal(n, "2 | u_n - 3", BigInt(floor_mod(u3, 2)), 0)) {
      report.expect_equal(n, "b_n = (u_n - 3)/2", b[n], BigInt(u3 / 2));
    }
    const BigInt v3 = v_closed - 3;
    if (report.expect_equal(n, "6 | v_n - 3", BigInt(floor_mod(v3, 6)), 0)) {
      report.expect_equal(n, "a_n = (v_n - 3)/6", a[n], BigInt(v3 / 6));
    }
    if (n >= 1) {
      report.expect_equal(n, "u_n - u_{n-1} = L_n", BigInt(u[n] - u[n - 1]), lucas[n]);
      report.expect_equal(n, "v_n - v_{n-1} = 6F_n", BigInt(v[n] - v[n - 1]), BigInt(6 * f[n]));
    }
  }
  return report;
}

IdentityReport check_v_square(std::size_t max_n) {
  require_range(max_n, "check_v_square");
  IdentityReport report{"vsquare", 0, max_n, {}};
  const auto u = sequence_prefix(Named::U, max_n + 1);
  const auto b = sequence_prefix(Named::B, max_n + 1);
  const auto lucas = sequence_prefix(Named::L, 2 * max_n + 2);
  for (std::size_t n = 0; n <= max_n; ++n) {
    const BigInt v = eval_v(n);
    const BigInt v2 = v * v;
    report.expect_equal(n, "v_n^2 = 3(u_n^2 + 2)", v2, BigInt(3 * (u[n] * u[n] + 2)));
    const BigInt l2 = lucas[2 * n + 1] + 2;
    if (report.expect_equal(n, "2 | L_{2n+1} + 2", BigInt(floor_mod(l2, 2)), 0)) {
      report.expect_equal(n, "v_n^2 = 3(L_{2n+1} + 2)/2", v2, BigInt(3 * (l2 / 2)));
    }
    report.expect_equal(n, "v_n^2 = 3(11 + 12b_n + 4b_n^2)", v2,
                        BigInt(3 * (11 + 12 * b[n] + 4 * b[n] * b[n])));
  }
  return report;
}

std::vector<IdentityReport> run_all(std::size_t max_n) {
  require_range(max_n, "run_all");
  return {check_lucas_identities(max_n), check_discriminant(max_n),
          check_congruences(max_n),      check_linkages(max_n),
          check_v_square(max_n),         check_bisection(max_n),
          check_difference_identities(max_n), check_convergent_laws(max_n)};
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = {
      "all",    "lucas",     "discriminant", "congruences", "linkages",
      "vsquare", "bisection", "differences",  "convergents"};
  return names;
}

std::vector<IdentityReport> run_suite(std::string_view name, std::size_t max_n) {
  if (name == "all") return run_all(max_n);
  if (name == "lucas") return {check_lucas_identities(max_n)};
  if (name == "discriminant") return {check_discriminant(max_n)};
  if (name == "congruences") return {check_congruences(max_n)};
  if (name == "linkages") return {check_linkages(max_n)};
  if (name == "vsquare") return {check_v_square(max_n)};
  if (name == "bisection") return {check_bisection(max_n)};
  if (name == "differences") return {check_difference_identities(max_n)};
  if (name == "convergents") return {check_convergent_laws(max_n)};
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace triavg
