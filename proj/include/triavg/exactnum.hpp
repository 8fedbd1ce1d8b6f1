#pragma once

// Exact arithmetic: big integers, reduced rationals, and the ring Q(sqrt 3).

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace triavg {

using BigInt = mpz_class;

/// Raised when a computation that must be exact by construction is not.
/// Always an implementation bug, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_string(const BigInt& x);

/// Parses a base-10 integer with optional leading '-'. Throws
/// std::invalid_argument on anything else.
BigInt parse_bigint(const std::string& text);

/// Remainder in [0, m).
unsigned long floor_mod(const BigInt& x, unsigned long m);

/// floor(sqrt(m)). Throws std::domain_error for m < 0.
BigInt isqrt(const BigInt& m);

/// The exact square root of m, if m is a perfect square.
std::optional<BigInt> is_perfect_square(const BigInt& m);

/// Exact rational in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rat(BigInt n, BigInt d);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// The integer value; throws ConsistencyError if the value is fractional.
  const BigInt& to_integer() const;

  Rat operator-() const;
  friend Rat operator+(const Rat& x, const Rat& y);
  friend Rat operator-(const Rat& x, const Rat& y);
  friend Rat operator*(const Rat& x, const Rat& y);

  friend bool operator==(const Rat& x, const Rat& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  BigInt num_;
  BigInt den_;
};

std::string to_string(const Rat& x);
std::ostream& operator<<(std::ostream& os, const Rat& x);

/// a + b*sqrt(3) with rational a, b. Division is intentionally absent.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadElem one() { return {1, 0}; }
  static QuadElem sqrt3() { return {0, 1}; }
  /// 2 + sqrt 3
  static QuadElem alpha() { return {2, 1}; }
  /// 2 - sqrt 3
  static QuadElem beta() { return {2, -1}; }

  /// Rational part.
  const Rat& a() const { return a_; }
  /// Coefficient of sqrt 3.
  const Rat& b() const { return b_; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) = default;

 private:
  Rat a_;
  Rat b_;
};

QuadElem quad_add(const QuadElem& x, const QuadElem& y);
QuadElem quad_sub(const QuadElem& x, const QuadElem& y);
QuadElem quad_mul(const QuadElem& x, const QuadElem& y);
QuadElem quad_scale(const QuadElem& x, const Rat& c);
QuadElem quad_conj(const QuadElem& x);
QuadElem quad_pow(const QuadElem& x, std::size_t n);

inline QuadElem operator+(const QuadElem& x, const QuadElem& y) { return quad_add(x, y); }
inline QuadElem operator-(const QuadElem& x, const QuadElem& y) { return quad_sub(x, y); }
inline QuadElem operator*(const QuadElem& x, const QuadElem& y) { return quad_mul(x, y); }

std::string to_string(const QuadElem& x);
std::ostream& operator<<(std::ostream& os, const QuadElem& x);

}  // namespace triavg
