#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "flatlab/error.hpp"

namespace flatlab {

using Rational = mpq_class;

// Parse a rational in the `INT` or `INT/INT` grammar (canonicalized, den > 0).
Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& q);

// Element of Q or a real quadratic field Q(sqrt(D)), stored as a + b*sqrt(D).
//
// Invariants: D is square-free and nonnegative, b == 0 forces D == 0, and
// rationals are kept reduced with positive denominator (mpq canonical form).
// Sign, comparison and zero tests are exact; no floating point is consulted.
//
// Values from different quadratic fields do not mix: operations throw
// MixedFieldError unless at least one operand is rational.
class ExactReal {
 public:
  ExactReal() : d_(0) {}
  ExactReal(long n) : a_(n), d_(0) {}
  ExactReal(const Rational& a) : a_(a), d_(0) {}
  ExactReal(Rational a, Rational b, long d);

  // sqrt(d) for a nonnegative integer d (square part extracted).
  static ExactReal sqrt_int(long d) { return ExactReal(0, 1, d); }

  const Rational& rat() const { return a_; }
  const Rational& irr() const { return b_; }
  long disc() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  int sign() const;

  ExactReal conjugate() const { return ExactReal(a_, -b_, d_); }
  // a^2 - b^2 D; rational, zero iff the value is zero.
  Rational field_norm() const { return a_ * a_ - b_ * b_ * d_; }

  double approx() const;

  ExactReal operator-() const { return ExactReal(-a_, -b_, d_); }
  ExactReal operator+(const ExactReal& o) const;
  ExactReal operator-(const ExactReal& o) const;
  ExactReal operator*(const ExactReal& o) const;
  ExactReal operator/(const ExactReal& o) const;
  ExactReal& operator+=(const ExactReal& o) { return *this = *this + o; }
  ExactReal& operator-=(const ExactReal& o) { return *this = *this - o; }
  ExactReal& operator*=(const ExactReal& o) { return *this = *this * o; }
  ExactReal& operator/=(const ExactReal& o) { return *this = *this / o; }

  bool operator==(const ExactReal& o) const { return (*this - o).is_zero(); }
  bool operator!=(const ExactReal& o) const { return !(*this == o); }
  bool operator<(const ExactReal& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const ExactReal& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const ExactReal& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const ExactReal& o) const { return (*this - o).sign() >= 0; }

  // If the value is a perfect square in its field (or in Q(sqrt(ambient_disc))
  // when the value is rational), its nonnegative root.
  std::optional<ExactReal> sqrt_in_field(long ambient_disc = 0) const;

  // Textual grammar: INT | INT/INT | a+b*sqrt(D) | a-b*sqrt(D), a and b
  // rationals.  str() and parse() round-trip bit-exactly.
  static ExactReal parse(std::string_view text);
  std::string str() const;

 private:
  // Common field for two operands; throws MixedFieldError.
  static long join_field(const ExactReal& x, const ExactReal& y);

  Rational a_, b_;
  long d_;
};

inline ExactReal operator*(const Rational& q, const ExactReal& x) { return ExactReal(q) * x; }
inline ExactReal operator*(long n, const ExactReal& x) { return ExactReal(n) * x; }

}  // namespace flatlab
