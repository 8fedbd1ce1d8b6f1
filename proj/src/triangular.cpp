#include "triavg/triangular.hpp"

#include <stdexcept>

#include "triavg/recurrences.hpp"

namespace triavg {

BigInt triangular(const BigInt& k) {
  if (k < 0) throw std::domain_error("triangular requires k >= 0");
  return k * (k + 1) / 2;
}

std::optional<BigInt> is_triangular(const BigInt& m) {
  if (m < 0) return std::nullopt;
  auto root = is_perfect_square(BigInt(8 * m + 1));
  if (!root) return std::nullopt;
  // 8m + 1 is odd, so its root is odd.
  return BigInt((*root - 1) / 2);
}

BigInt prefix_sum_literal(const BigInt& s) {
  BigInt sum = 0;
  BigInt t = 0;
  for (BigInt k = 1; k <= s; ++k) {
    t += k;
    sum += t;
  }
  return sum;
}

BigInt prefix_sum(const BigInt& s) {
  if (s < 0) throw std::domain_error("prefix_sum requires s >= 0");
  return s * (s + 1) * (s + 2) / 6;
}

Rat prefix_average(const BigInt& s) {
  if (s < 1) throw std::domain_error("prefix_average requires s >= 1");
  return Rat(BigInt((s + 1) * (s + 2)), 6);
}

bool check_pair(const BigInt& s, const BigInt& r) {
  return s * s + 3 * s + 2 == 3 * r * r + 3 * r;
}

std::optional<BigInt> solve_s_for_r(const BigInt& r) {
  if (r < 1) throw std::domain_error("solve_s_for_r requires r >= 1");
  auto root = is_perfect_square(BigInt(1 + 12 * r + 12 * r * r));
  if (!root) return std::nullopt;
  BigInt twice = *root - 3;
  if (floor_mod(twice, 2) != 0) return std::nullopt;
  BigInt s = twice / 2;
  if (s < 1) return std::nullopt;
  return s;
}

std::optional<BigInt> solve_r_for_s(const BigInt& s) {
  if (s < 1) throw std::domain_error("solve_r_for_s requires s >= 1");
  auto root = is_perfect_square(BigInt(3 * (11 + 12 * s + 4 * s * s)));
  if (!root || floor_mod(*root, 6) != 3) return std::nullopt;
  BigInt r = (*root - 3) / 6;
  if (r < 1) return std::nullopt;
  return r;
}

std::vector<Solution> enumerate_solutions(const BigInt& s_max) {
  if (s_max < 1) throw std::domain_error("enumerate_solutions requires s_max >= 1");
  std::vector<Solution> out;
  for (BigInt s = 1; s <= s_max; ++s) {
    if (auto r = solve_r_for_s(s)) out.push_back({s, std::move(*r)});
  }
  return out;
}

TriangularWitness witness(std::size_t n) {
  if (n == 0) throw std::domain_error("b_0 = -1 is not a valid prefix length");

  TriangularWitness w;
  w.n = n;
  w.s = eval_iterative(spec_of(Named::B), n);
  w.r = eval_iterative(spec_of(Named::A), n);

  w.sum = prefix_sum(w.s);
  if (w.s <= kLiteralSumLimit) {
    const BigInt literal = prefix_sum_literal(w.s);
    if (literal != w.sum) {
      throw ConsistencyError("prefix sum mismatch at s = " + to_string(w.s) + ": literal " +
                             to_string(literal) + " vs closed " + to_string(w.sum));
    }
  }

  const Rat avg(w.sum, w.s);
  if (!avg.is_integer()) {
    throw ConsistencyError("average of the first " + to_string(w.s) +
                           " triangular numbers is not an integer: " + to_string(avg));
  }
  if (avg != prefix_average(w.s)) {
    throw ConsistencyError("prefix_average disagrees with sum / s at s = " + to_string(w.s));
  }
  w.avg = avg.num();

  if (!verify_witness(w)) {
    throw ConsistencyError("witness for n = " + std::to_string(n) + " failed verification");
  }
  return w;
}

bool verify_witness(const TriangularWitness& w) {
  if (w.s < 1 || w.r < 0) return false;
  return w.avg == triangular(w.r) && w.s * w.avg == w.sum && w.sum == prefix_sum(w.s) &&
         check_pair(w.s, w.r);
}

}  // namespace triavg
