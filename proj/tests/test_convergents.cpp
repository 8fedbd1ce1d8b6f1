#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oeis_prefixes.hpp"
#include "triavg/convergents.hpp"
#include "triavg/recurrences.hpp"

using namespace triavg;

namespace {

std::vector<BigInt> numerators(const std::vector<Convergent>& cs) {
  std::vector<BigInt> out;
  for (const auto& c : cs) out.push_back(c.p);
  return out;
}

std::vector<BigInt> denominators(const std::vector<Convergent>& cs) {
  std::vector<BigInt> out;
  for (const auto& c : cs) out.push_back(c.q);
  return out;
}

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("cf_sqrt3") {
  CHECK(numerators(cf_sqrt3(2)) == big({1, 1}));
  CHECK(numerators(cf_sqrt3(6)) == big({1, 1, 2, 5, 7, 19}));
  CHECK(denominators(cf_sqrt3(6)) == big({0, 1, 1, 3, 4, 11}));
  CHECK(cf_sqrt3(8).back().p == 71);
  CHECK(cf_sqrt3(8).back().idx == 7);
  CHECK_THROWS_AS(cf_sqrt3(0), std::domain_error);

  const auto& ref = triavg::testing::kA002531;
  CHECK(numerators(cf_sqrt3(ref.size())) == std::vector<BigInt>(ref.begin(), ref.end()));
}

TEST_CASE("convergent quality") {
  for (const auto& c : cf_sqrt3(200)) {
    const BigInt norm = abs(BigInt(c.p * c.p - 3 * c.q * c.q));
    CHECK((norm == 1 || norm == 2));
    // |p/q - sqrt3| < 1/q^2  <=>  (pq - 1)^2 < 3q^4 < (pq + 1)^2.
    if (c.q > 1) {
      const BigInt lo = c.p * c.q - 1;
      const BigInt hi = c.p * c.q + 1;
      const BigInt q4 = c.q * c.q * c.q * c.q;
      CHECK(lo * lo < 3 * q4);
      CHECK(hi * hi > 3 * q4);
    }
  }
}

TEST_CASE("z") {
  CHECK(z(0) == 1);
  CHECK(z(1) == 1);
  CHECK(z(4) == 7);
  const auto lucas = sequence_prefix(Named::L, 65);
  for (std::size_t m = 0; m <= 64; ++m) {
    REQUIRE(floor_mod(lucas[m], 2) == 0);
    CHECK(z(2 * m) == lucas[m] / 2);
    if (m >= 1) CHECK(z(2 * m + 1) == 2 * z(2 * m) + z(2 * m - 1));
  }
}

TEST_CASE("bisection") {
  CHECK(eval_u(4) == 265);
  CHECK(z(9) == 265);
  for (std::size_t max_n : {1u, 4u, 64u, 500u}) {
    const auto report = check_bisection(max_n);
    CHECK(report.passed());
    CHECK(report.first_n == 0);
    CHECK(report.last_n == max_n);
  }
}

TEST_CASE("difference chain") {
  CHECK(z(3) - z(1) == 4);
  CHECK(z(5) - z(3) == 14);
  CHECK(2 * z(4) == 14);
  for (std::size_t max_n : {1u, 3u, 64u}) {
    const auto report = check_difference_identities(max_n);
    CHECK(report.passed());
    CHECK(report.first_n == 1);
  }
}

TEST_CASE("convergent laws") {
  CHECK(check_convergent_laws(1).passed());
  CHECK(check_convergent_laws(64).passed());
  CHECK_THROWS_AS(check_convergent_laws(0), std::domain_error);
}
