#include "triavg/convergents.hpp"

#include <algorithm>
#include <stdexcept>

#include "triavg/recurrences.hpp"

namespace triavg {

std::vector<Convergent> cf_sqrt3(std::size_t count) {
  if (count < 1) throw std::domain_error("cf_sqrt3 requires count >= 1");
  std::vector<Convergent> out;
  out.reserve(count);
  out.push_back({1, 0, 0});

  // p_i = a_i p_{i-1} + p_{i-2} with p_{-2} = 0, p_{-1} = 1 (and q mirrored).
  BigInt p_prev = 0, q_prev = 1;
  for (std::size_t idx = 1; idx < count; ++idx) {
    const std::size_t i = idx - 1;  // partial-quotient index
    const unsigned long a = (i == 0 || i % 2 == 1) ? 1 : 2;
    const Convergent& last = out.back();
    BigInt p = a * last.p + p_prev;
    BigInt q = a * last.q + q_prev;
    p_prev = last.p;
    q_prev = last.q;
    out.push_back({std::move(p), std::move(q), idx});
  }
  return out;
}

BigInt z(std::size_t n) { return cf_sqrt3(n + 1).back().p; }

IdentityReport check_bisection(std::size_t max_n) {
  if (max_n < 1) throw std::domain_error("check_bisection requires max_n >= 1");
  IdentityReport report{"bisection", 0, max_n, {}};
  const auto conv = cf_sqrt3(2 * max_n + 2);
  const auto u = sequence_prefix(Named::U, max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    report.expect_equal(n, "u_n = z_{2n+1}", u[n], conv[2 * n + 1].p);
  }
  return report;
}

IdentityReport check_difference_identities(std::size_t max_n) {
  if (max_n < 1) throw std::domain_error("check_difference_identities requires max_n >= 1");
  IdentityReport report{"differences", 1, max_n, {}};
  const auto conv = cf_sqrt3(2 * max_n + 2);
  const auto u = sequence_prefix(Named::U, max_n + 1);
  const auto lucas = sequence_prefix(Named::L, max_n + 1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const BigInt du = u[n] - u[n - 1];
    report.expect_equal(n, "u_n - u_{n-1} = L_n", du, lucas[n]);
    report.expect_equal(n, "L_n = 2 z_{2n}", lucas[n], BigInt(2 * conv[2 * n].p));
    report.expect_equal(n, "2 z_{2n} = z_{2n+1} - z_{2n-1}", BigInt(2 * conv[2 * n].p),
                        BigInt(conv[2 * n + 1].p - conv[2 * n - 1].p));
  }
  return report;
}

IdentityReport check_convergent_laws(std::size_t max_n) {
  if (max_n < 1) throw std::domain_error("check_convergent_laws requires max_n >= 1");
  IdentityReport report{"convergents", 0, max_n, {}};
  const auto conv = cf_sqrt3(2 * max_n + 2);
  const auto lucas = sequence_prefix(Named::L, max_n + 1);

  for (const Convergent& c : conv) {
    const std::size_t m = c.idx / 2;
    const BigInt norm = abs(BigInt(c.p * c.p - 3 * c.q * c.q));
    if (norm != 1 && norm != 2) report.failures.push_back({m, "|p^2 - 3q^2| in {1,2}", norm, 1});
    BigInt g;
    mpz_gcd(g.get_mpz_t(), c.p.get_mpz_t(), c.q.get_mpz_t());
    report.expect_equal(m, "gcd(p, q) = 1", g, 1);
    if (c.p <= 0) report.failures.push_back({m, "z > 0", c.p, 0});
  }
  for (std::size_t m = 0; m <= max_n; ++m) {
    if (!report.expect_equal(m, "L_m even", BigInt(floor_mod(lucas[m], 2)), 0)) continue;
    report.expect_equal(m, "z_{2m} = L_m / 2", conv[2 * m].p, BigInt(lucas[m] / 2));
    if (m >= 1) {
      report.expect_equal(m, "z_{2m+1} = 2 z_{2m} + z_{2m-1}", conv[2 * m + 1].p,
                          BigInt(2 * conv[2 * m].p + conv[2 * m - 1].p));
    }
  }
  // The per-convergent checks above were pushed in idx order, the law checks
  // in m order; keep the report sorted by n.
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const IdentityFailure& x, const IdentityFailure& y) { return x.n < y.n; });
  return report;
}

}  // namespace triavg
