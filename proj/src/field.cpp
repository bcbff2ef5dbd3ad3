#include "tdpair/field.hpp"

#include "tdpair/errors.hpp"

namespace tdpair {

FieldElement::FieldElement(const RationalFunction& f) : value_(f) { demote(); }

void FieldElement::demote() {
  if (auto* f = std::get_if<RationalFunction>(&value_); f && f->is_constant()) {
    value_ = f->constant_value();
  }
}

RationalFunction FieldElement::as_function() const {
  if (is_rational()) return RationalFunction(rational());
  return std::get<RationalFunction>(value_);
}

bool FieldElement::is_zero() const { return is_rational() && rational().is_zero(); }

bool FieldElement::is_integer_in(long lo, long hi) const {
  if (!is_integer()) return false;
  const Rational& r = rational();
  return r >= Rational(lo) && r <= Rational(hi);
}

std::string FieldElement::to_string() const {
  if (is_rational()) return rational().to_string();
  return std::get<RationalFunction>(value_).to_string();
}

FieldElement FieldElement::operator-() const {
  if (is_rational()) return FieldElement(-rational());
  return FieldElement(-std::get<RationalFunction>(value_));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (is_rational()) return FieldElement(Rational(1) / rational());
  return FieldElement(std::get<RationalFunction>(value_).inverse());
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) += o.rational();
  } else {
    value_ = as_function() + o.as_function();
    demote();
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) -= o.rational();
  } else {
    value_ = as_function() - o.as_function();
    demote();
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) *= o.rational();
  } else {
    value_ = as_function() * o.as_function();
    demote();
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  if (o.is_zero()) throw DivisionByZero("field division by zero");
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) /= o.rational();
  } else {
    value_ = as_function() / o.as_function();
    demote();
  }
  return *this;
}

Rational limit_at_zero(const FieldElement& f) {
  if (f.is_rational()) return f.rational();
  return limit_at_zero(f.as_function());
}

}  // namespace tdpair
