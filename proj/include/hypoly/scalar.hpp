#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "hypoly/errors.hpp"

namespace hypoly {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds a reduced rational with positive denominator; throws on zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Exact square root of a nonnegative rational, if it is rational.
std::optional<Rational> rational_sqrt(const Rational& q);

bool rational_is_integer(const Rational& q);

/// An element a + b*sqrt(2) of the real quadratic field Q(sqrt2).
///
/// Both components are kept reduced, so equality is structural and every
/// predicate downstream (signs, incidences, angles) is decided exactly.
class ExactScalar {
 public:
  ExactScalar() : a_(0), b_(0) {}
  ExactScalar(long v) : a_(v), b_(0) {}  // NOLINT: implicit by design
  ExactScalar(const Rational& a) : a_(a), b_(0) {}
  ExactScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static ExactScalar sqrt2() { return ExactScalar(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Sign of the real number a + b*sqrt2, decided without floating point.
  int sign() const;

  ExactScalar operator-() const { return ExactScalar(-a_, -b_); }
  ExactScalar operator+(const ExactScalar& o) const { return ExactScalar(a_ + o.a_, b_ + o.b_); }
  ExactScalar operator-(const ExactScalar& o) const { return ExactScalar(a_ - o.a_, b_ - o.b_); }
  ExactScalar operator*(const ExactScalar& o) const {
    return ExactScalar(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
  }
  ExactScalar operator/(const ExactScalar& o) const { return *this * o.inverse(); }

  ExactScalar& operator+=(const ExactScalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
  ExactScalar& operator-=(const ExactScalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  ExactScalar& operator*=(const ExactScalar& o) { *this = *this * o; return *this; }

  bool operator==(const ExactScalar& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }
  bool operator<(const ExactScalar& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const ExactScalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const ExactScalar& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const ExactScalar& o) const { return (*this - o).sign() >= 0; }

  /// Multiplicative inverse via the conjugate; throws DivisionByZeroError on 0.
  ExactScalar inverse() const;

  /// Exact square root within Q(sqrt2) when it exists.
  std::optional<ExactScalar> sqrt() const;

  /// Presentation-boundary conversion; the core never rounds.
  double to_double() const;

  std::string str() const;

  /// Total-order comparison consistent with the real embedding.
  int compare(const ExactScalar& o) const { return (*this - o).sign(); }

  /// Lexicographic component order (a, then b); used only for canonical keys.
  int compare_structural(const ExactScalar& o) const;

 private:
  Rational a_, b_;
};

inline ExactScalar operator*(long v, const ExactScalar& x) { return ExactScalar(v) * x; }

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

/// Renders a rational as "p/q" (or "p" for integers).
std::string rational_str(const Rational& q);

}  // namespace hypoly
