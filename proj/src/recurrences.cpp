#include "triavg/recurrences.hpp"

#include <stdexcept>

namespace triavg {

RecurrenceSpec spec_of(Named id) {
  switch (id) {
    case Named::L: return {0, 2, 4};
    case Named::F: return {0, 0, 1};
    case Named::A: return {1, 0, 1};
    case Named::B: return {3, -1, 1};
    case Named::U: return {0, 1, 5};
    case Named::V: return {0, 3, 9};
  }
  throw std::invalid_argument("unknown sequence id");
}

RecurrenceSpec spec_of(const SequenceId& id) {
  if (const auto* named = std::get_if<Named>(&id)) return spec_of(*named);
  return std::get<RecurrenceSpec>(id);
}

std::string_view letter(Named id) {
  switch (id) {
    case Named::L: return "L";
    case Named::F: return "F";
    case Named::A: return "a";
    case Named::B: return "b";
    case Named::U: return "u";
    case Named::V: return "v";
  }
  return "?";
}

std::optional<Named> named_from_letter(std::string_view s) {
  for (Named id : kAllNamed) {
    if (letter(id) == s) return id;
  }
  return std::nullopt;
}

BigInt eval_iterative(const RecurrenceSpec& spec, std::size_t n) {
  if (n == 0) return spec.w0;
  BigInt prev = spec.w0;
  BigInt cur = spec.w1;
  for (std::size_t i = 2; i <= n; ++i) {
    BigInt next = 4 * cur - prev + spec.k;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

BigInt integral_value(const QuadElem& x, const char* what) {
  if (!x.b().is_zero()) {
    throw ConsistencyError(std::string(what) + ": nonzero sqrt(3) part in " + to_string(x));
  }
  if (!x.a().is_integer()) {
    throw ConsistencyError(std::string(what) + ": non-integral value " + to_string(x.a()));
  }
  return x.a().num();
}

}  // namespace

BigInt eval_closed_form(const RecurrenceSpec& spec, std::size_t n) {
  const QuadElem alpha = QuadElem::alpha();
  const QuadElem beta = QuadElem::beta();
  const Rat k(spec.k), r(spec.w0), s(spec.w1);
  const Rat twelfth(1, 12);

  // Coefficient of alpha^n: (s alpha + (k + 4r - s) beta + k - 2r) / 12.
  QuadElem c_alpha = quad_scale(alpha, s) + quad_scale(beta, k + Rat(4) * r - s) +
                     QuadElem(k - Rat(2) * r, 0);
  c_alpha = quad_scale(c_alpha, twelfth);
  const QuadElem c_beta = quad_conj(c_alpha);

  QuadElem value = QuadElem(-k * Rat(1, 2), 0) + c_alpha * quad_pow(alpha, n) +
                   c_beta * quad_pow(beta, n);
  return integral_value(value, "eval_closed_form");
}

BigInt eval_via_L(const RecurrenceSpec& spec, std::size_t n) {
  if (n == 0) throw std::domain_error("eval_via_L requires n >= 1 (uses L_{n-1})");
  const RecurrenceSpec lucas = spec_of(Named::L);
  const Rat k(spec.k), r(spec.w0), s(spec.w1);
  const Rat ln(eval_iterative(lucas, n));
  const Rat ln1(eval_iterative(lucas, n - 1));

  Rat value = -k * Rat(1, 2) + (Rat(4) * s + k - Rat(2) * r) * Rat(1, 12) * ln +
              (k + Rat(4) * r - Rat(2) * s) * Rat(1, 12) * ln1;
  return value.to_integer();
}

std::vector<BigInt> gf_coefficients(const RecurrenceSpec& spec, std::size_t count) {
  if (count < 1) throw std::domain_error("gf_coefficients requires count >= 1");
  const BigInt numer[3] = {spec.w0, spec.w1 - 5 * spec.w0, spec.k + 4 * spec.w0 - spec.w1};

  // Denominator 1 - 5x + 5x^2 - x^3 has unit constant term, so the long
  // division is c_n = num_n + 5 c_{n-1} - 5 c_{n-2} + c_{n-3}.
  std::vector<BigInt> c;
  c.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BigInt term = i < 3 ? numer[i] : BigInt(0);
    if (i >= 1) term += 5 * c[i - 1];
    if (i >= 2) term -= 5 * c[i - 2];
    if (i >= 3) term += c[i - 3];
    c.push_back(std::move(term));
  }
  return c;
}

namespace {

// (1 + sqrt3) alpha^n and (sqrt3 - 1) beta^n.
std::pair<QuadElem, QuadElem> half_power_terms(std::size_t n) {
  const QuadElem root_alpha(1, 1);
  const QuadElem root_beta(-1, 1);
  return {root_alpha * quad_pow(QuadElem::alpha(), n),
          root_beta * quad_pow(QuadElem::beta(), n)};
}

}  // namespace

BigInt eval_u(std::size_t n) {
  auto [x, y] = half_power_terms(n);
  BigInt u = integral_value(quad_scale(x - y, Rat(1, 2)), "eval_u");
  if (u <= 0 || floor_mod(u, 2) != 1) {
    throw ConsistencyError("eval_u: expected a positive odd integer, got " + to_string(u));
  }
  return u;
}

BigInt eval_v(std::size_t n) {
  auto [x, y] = half_power_terms(n);
  const QuadElem inner = quad_scale(x + y, Rat(1, 2));
  if (!inner.a().is_zero()) {
    throw ConsistencyError("eval_v: rational part must vanish before scaling, got " +
                           to_string(inner));
  }
  return integral_value(inner * QuadElem::sqrt3(), "eval_v");
}

std::vector<BigInt> sequence_prefix(const SequenceId& id, std::size_t count) {
  if (count < 1) throw std::domain_error("sequence_prefix requires count >= 1");
  const RecurrenceSpec spec = spec_of(id);
  std::vector<BigInt> out;
  out.reserve(count);
  out.push_back(spec.w0);
  if (count > 1) out.push_back(spec.w1);
  for (std::size_t i = 2; i < count; ++i) {
    out.push_back(4 * out[i - 1] - out[i - 2] + spec.k);
  }
  return out;
}

}  // namespace triavg
