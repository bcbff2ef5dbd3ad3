#pragma once

#include <concepts>
#include <string>
#include <variant>

#include "tdpair/rational.hpp"
#include "tdpair/rational_function.hpp"

namespace tdpair {

/// Scalar of the exact field the library works over: either a rational or a
/// rational function in t. Constants are always stored as Rational, so the
/// tag is canonical and equality never has to compare across tags.
class FieldElement {
 public:
  FieldElement() : value_(Rational(0)) {}
  template <std::integral I>
  FieldElement(I v) : value_(Rational(v)) {}  // NOLINT(implicit)
  FieldElement(const Rational& r) : value_(r) {}  // NOLINT(implicit)
  FieldElement(const RationalFunction& f);       // NOLINT(implicit)

  static FieldElement parse(std::string_view text) { return FieldElement(Rational::parse(text)); }
  static FieldElement variable() { return FieldElement(RationalFunction::variable()); }

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  RationalFunction as_function() const;

  bool is_zero() const;
  bool is_one() const { return is_rational() && rational().is_one(); }
  bool is_integer() const { return is_rational() && rational().is_integer(); }
  /// True when the value is an integer in [lo, hi].
  bool is_integer_in(long lo, long hi) const;

  std::string to_string() const;

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }

 private:
  void demote();
  std::variant<Rational, RationalFunction> value_;
};

/// Value at t = 0; rationals are returned unchanged.
Rational limit_at_zero(const FieldElement& f);

}  // namespace tdpair
