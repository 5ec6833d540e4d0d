#include "hypoly/scalar.hpp"

#include <ostream>

namespace hypoly {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DivisionByZeroError();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool rational_is_integer(const Rational& q) { return q.get_den() == 1; }

std::optional<Rational> rational_sqrt(const Rational& q) {
  int s = sgn(q);
  if (s < 0) return std::nullopt;
  if (s == 0) return Rational(0);
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  BigInt sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return make_rational(sn, sd);
}

int ExactScalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Components of opposite sign: compare a^2 against 2 b^2. Equality cannot
  // happen with both parts nonzero since sqrt2 is irrational.
  int t = sgn(Rational(a_ * a_ - 2 * b_ * b_));
  return sa * t;
}

ExactScalar ExactScalar::inverse() const {
  // 1/(a + b sqrt2) = (a - b sqrt2) / (a^2 - 2 b^2)
  Rational norm = a_ * a_ - 2 * b_ * b_;
  if (sgn(norm) == 0) {
    if (is_zero()) throw DivisionByZeroError();
    // a^2 = 2 b^2 with (a,b) != 0 is impossible in Q.
    throw Error("internal: conjugate norm vanished on a nonzero element");
  }
  return ExactScalar(a_ / norm, -b_ / norm);
}

std::optional<ExactScalar> ExactScalar::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (sgn(b_) == 0) {
    if (auto c = rational_sqrt(a_)) return ExactScalar(*c, Rational(0));
    if (auto d = rational_sqrt(a_ / 2)) return ExactScalar(Rational(0), *d);
    return std::nullopt;
  }
  // (c + d sqrt2)^2 = (c^2 + 2 d^2) + 2 c d sqrt2, so with b != 0 both c and d
  // are nonzero and d^2 satisfies 8 d^4 - 4 a d^2 + b^2 = 0.
  auto disc = rational_sqrt(a_ * a_ - 2 * b_ * b_);
  if (!disc) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    Rational d2 = (pick == 0) ? Rational((a_ + *disc) / 4) : Rational((a_ - *disc) / 4);
    if (sgn(d2) <= 0) continue;
    auto d = rational_sqrt(d2);
    if (!d) continue;
    Rational c = b_ / (2 * (*d));
    ExactScalar y(c, *d);
    if (y * y != *this) continue;
    return y.sign() >= 0 ? y : -y;
  }
  return std::nullopt;
}

double ExactScalar::to_double() const {
  return a_.get_d() + b_.get_d() * 1.41421356237309504880168872420969808;
}

int ExactScalar::compare_structural(const ExactScalar& o) const {
  int c = cmp(a_, o.a_);
  if (c != 0) return c;
  return cmp(b_, o.b_);
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string ExactScalar::str() const {
  if (sgn(b_) == 0) return rational_str(a_);
  std::string s;
  if (sgn(a_) != 0) s += rational_str(a_) + (sgn(b_) > 0 ? "+" : "");
  if (b_ == 1) {
    s += "sqrt2";
  } else if (b_ == -1) {
    s += "-sqrt2";
  } else {
    s += rational_str(b_) + "*sqrt2";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.str(); }

}  // namespace hypoly
