#include "triavg/exactnum.hpp"

#include <utility>

namespace triavg {

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  return BigInt(text, 10);
}

unsigned long floor_mod(const BigInt& x, unsigned long m) {
  return mpz_fdiv_ui(x.get_mpz_t(), m);
}

BigInt isqrt(const BigInt& m) {
  if (m < 0) throw std::domain_error("isqrt of a negative number");
  if (m < 2) return m;

  // Start above the root: 2^ceil(bits/2) > sqrt(m).
  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  BigInt x = 1;
  x <<= (bits + 1) / 2;

  // Heron iteration decreases strictly until it reaches floor(sqrt(m)).
  for (;;) {
    BigInt y = (x + m / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > m) --x;
  while ((x + 1) * (x + 1) <= m) ++x;
  return x;
}

std::optional<BigInt> is_perfect_square(const BigInt& m) {
  if (m < 0) return std::nullopt;
  BigInt q = isqrt(m);
  if (q * q != m) return std::nullopt;
  return q;
}

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

const BigInt& Rat::to_integer() const {
  if (den_ != 1) throw ConsistencyError("expected an integer, got " + to_string(*this));
  return num_;
}

Rat Rat::operator-() const {
  Rat r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rat operator+(const Rat& x, const Rat& y) {
  if (x.den_ == 1 && y.den_ == 1) return Rat(BigInt(x.num_ + y.num_));
  return Rat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rat operator-(const Rat& x, const Rat& y) { return x + (-y); }

Rat operator*(const Rat& x, const Rat& y) {
  if (x.den_ == 1 && y.den_ == 1) return Rat(BigInt(x.num_ * y.num_));
  return Rat(x.num_ * y.num_, x.den_ * y.den_);
}

std::string to_string(const Rat& x) {
  if (x.is_integer()) return to_string(x.num());
  return to_string(x.num()) + "/" + to_string(x.den());
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << to_string(x); }

QuadElem quad_add(const QuadElem& x, const QuadElem& y) {
  return {x.a() + y.a(), x.b() + y.b()};
}

QuadElem quad_sub(const QuadElem& x, const QuadElem& y) {
  return {x.a() - y.a(), x.b() - y.b()};
}

// (a + b r)(c + d r) = (ac + 3bd) + (ad + bc) r, with r^2 = 3.
QuadElem quad_mul(const QuadElem& x, const QuadElem& y) {
  return {x.a() * y.a() + Rat(3) * x.b() * y.b(), x.a() * y.b() + x.b() * y.a()};
}

QuadElem quad_scale(const QuadElem& x, const Rat& c) { return {x.a() * c, x.b() * c}; }

QuadElem quad_conj(const QuadElem& x) { return {x.a(), -x.b()}; }

QuadElem quad_pow(const QuadElem& x, std::size_t n) {
  QuadElem result = QuadElem::one();
  QuadElem base = x;
  while (n > 0) {
    if (n & 1) result = quad_mul(result, base);
    n >>= 1;
    if (n > 0) base = quad_mul(base, base);
  }
  return result;
}

std::string to_string(const QuadElem& x) {
  return to_string(x.a()) + " + " + to_string(x.b()) + "*sqrt(3)";
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << to_string(x); }

}  // namespace triavg
