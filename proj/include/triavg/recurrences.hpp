#pragma once

// The second-order family w_n = 4 w_{n-1} - w_{n-2} + k and its named
// members. Every evaluator here is exact; the closed forms route through
// Q(sqrt 3) and must collapse to integers.

#include <cstddef>
#include <string>
#include <string_view>
#include <optional>
#include <variant>
#include <vector>

#include "triavg/exactnum.hpp"

namespace triavg {

/// w(k, w0, w1): forcing constant k and the first two terms.
struct RecurrenceSpec {
  BigInt k;
  BigInt w0;
  BigInt w1;

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

enum class Named { L, F, A, B, U, V };

using SequenceId = std::variant<Named, RecurrenceSpec>;

/// L = w(0,2,4), F = w(0,0,1), A = w(1,0,1), B = w(3,-1,1), U = w(0,1,5),
/// V = w(0,3,9).
RecurrenceSpec spec_of(Named id);
RecurrenceSpec spec_of(const SequenceId& id);

/// Single-letter name used on the command line ("L", "F", "a", "b", "u", "v").
std::string_view letter(Named id);
std::optional<Named> named_from_letter(std::string_view s);

inline constexpr Named kAllNamed[] = {Named::L, Named::F, Named::A,
                                      Named::B, Named::U, Named::V};

BigInt eval_iterative(const RecurrenceSpec& spec, std::size_t n);

/// Evaluates the alpha^n / beta^n closed form over Q(sqrt 3).
/// Throws ConsistencyError if the result is not a rational integer.
BigInt eval_closed_form(const RecurrenceSpec& spec, std::size_t n);

/// w_n = -k/2 + (4 w1 + k - 2 w0)/12 L_n + (k + 4 w0 - 2 w1)/12 L_{n-1}.
/// Requires n >= 1; throws std::domain_error for n = 0.
BigInt eval_via_L(const RecurrenceSpec& spec, std::size_t n);

/// First `count` Taylor coefficients of
///   (w0 + (w1 - 5 w0) x + (k + 4 w0 - w1) x^2) / (1 - 5x + 5x^2 - x^3).
std::vector<BigInt> gf_coefficients(const RecurrenceSpec& spec, std::size_t count);

/// u_n = [(1 + sqrt3) alpha^n - (sqrt3 - 1) beta^n] / 2.
BigInt eval_u(std::size_t n);

/// v_n = sqrt3 [(1 + sqrt3) alpha^n + (sqrt3 - 1) beta^n] / 2.
BigInt eval_v(std::size_t n);

/// [w_0, ..., w_{count-1}] by iteration. Requires count >= 1.
std::vector<BigInt> sequence_prefix(const SequenceId& id, std::size_t count);

}  // namespace triavg
