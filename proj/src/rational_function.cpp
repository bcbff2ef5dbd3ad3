#include "tdpair/rational_function.hpp"

#include "tdpair/errors.hpp"

namespace tdpair {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Polynomial::exact_quotient(num_, g);
      den_ = Polynomial::exact_quotient(den_, g);
    }
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees down.
  Polynomial g1 = Polynomial::gcd(num_, o.den_);
  Polynomial g2 = Polynomial::gcd(o.num_, den_);
  Polynomial a = g1.is_constant() ? num_ : Polynomial::exact_quotient(num_, g1);
  Polynomial d = g1.is_constant() ? o.den_ : Polynomial::exact_quotient(o.den_, g1);
  Polynomial c = g2.is_constant() ? o.num_ : Polynomial::exact_quotient(o.num_, g2);
  Polynomial b = g2.is_constant() ? den_ : Polynomial::exact_quotient(den_, g2);
  num_ = a * c;
  den_ = b * d;
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.is_constant()) {
    return num_.to_string(var);
  }
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

Rational limit_at_zero(const RationalFunction& f) {
  const Rational d0 = f.denominator().coefficient(0);
  if (d0.is_zero()) throw PoleAtZero("rational function " + f.to_string() + " has a pole at t = 0");
  return f.numerator().coefficient(0) / d0;
}

}  // namespace tdpair
