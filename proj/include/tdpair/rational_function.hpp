#pragma once

#include <string>

#include "tdpair/polynomial.hpp"

namespace tdpair {

/// Element of Q(t) in canonical form: gcd(numerator, denominator) = 1 and the
/// denominator is monic. Equality is therefore structural.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}  // NOLINT(implicit)
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable(), Polynomial(Rational(1))); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; caller checks is_constant().
  Rational constant_value() const { return num_.coefficient(0); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// f(0) for a reduced rational function; throws PoleAtZero when the reduced
/// denominator vanishes at the origin.
Rational limit_at_zero(const RationalFunction& f);

}  // namespace tdpair
