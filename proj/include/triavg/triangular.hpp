#pragma once

// Triangular numbers, exact prefix averages, and the Diophantine equation
//   s^2 + 3s + 2 = 3r^2 + 3r
// whose positive solutions are the pairs (s, r) for which the average of
// T_1..T_s equals T_r.

#include <cstddef>
#include <optional>
#include <vector>

#include "triavg/exactnum.hpp"

namespace triavg {

/// Prefix lengths up to this bound are summed literally in witness().
inline constexpr long kLiteralSumLimit = 100000;

/// T_k = k(k+1)/2. Throws std::domain_error for k < 0.
BigInt triangular(const BigInt& k);

/// k with T_k = m, if m is triangular.
std::optional<BigInt> is_triangular(const BigInt& m);

/// T_1 + ... + T_s by literal summation (s >= 0).
BigInt prefix_sum_literal(const BigInt& s);

/// T_1 + ... + T_s = s(s+1)(s+2)/6 (s >= 0).
BigInt prefix_sum(const BigInt& s);

/// (T_1 + ... + T_s)/s = (s+1)(s+2)/6. Throws std::domain_error for s < 1.
Rat prefix_average(const BigInt& s);

/// s^2 + 3s + 2 == 3r^2 + 3r.
bool check_pair(const BigInt& s, const BigInt& r);

/// s = (sqrt(1 + 12r + 12r^2) - 3)/2 when that is a positive integer.
/// Requires r >= 1.
std::optional<BigInt> solve_s_for_r(const BigInt& r);

/// r = (sqrt(3(11 + 12s + 4s^2)) - 3)/6 when that is a positive integer.
/// Requires s >= 1.
std::optional<BigInt> solve_r_for_s(const BigInt& s);

struct Solution {
  BigInt s;
  BigInt r;
  friend bool operator==(const Solution&, const Solution&) = default;
};

/// All solutions with 1 <= s <= s_max in increasing s, found by scanning s
/// with solve_r_for_s. Independent of the recurrences.
std::vector<Solution> enumerate_solutions(const BigInt& s_max);

/// One verified instance: the average of T_1..T_s is T_r, with s = b_n and
/// r = a_n.
struct TriangularWitness {
  std::size_t n;
  BigInt s;
  BigInt sum;
  BigInt avg;
  BigInt r;
};

/// Builds and verifies the witness for index n >= 1. Throws
/// std::domain_error for n = 0 and ConsistencyError if verification fails.
TriangularWitness witness(std::size_t n);

/// Re-checks the three witness invariants from scratch.
bool verify_witness(const TriangularWitness& w);

}  // namespace triavg
