#include "tdpair/combinatorics.hpp"

#include "tdpair/errors.hpp"

namespace tdpair {

FieldElement pochhammer(const FieldElement& x, int k) {
  if (k < 0) throw IndexOutOfRange("pochhammer with negative length " + std::to_string(k));
  FieldElement acc(1);
  if (x.is_rational()) {
    // Fast path avoids variant dispatch on every factor.
    mpq_class prod(1);
    mpq_class v = x.rational().value();
    for (int j = 0; j < k; ++j) {
      prod *= v;
      if (sgn(prod) == 0) return FieldElement(0);
      v += 1;
    }
    return FieldElement(Rational(prod));
  }
  FieldElement term = x;
  for (int j = 0; j < k; ++j) {
    acc *= term;
    term += FieldElement(1);
  }
  return acc;
}

mpz_class binomial(long n, long k) {
  if (n < 0) throw IndexOutOfRange("binomial with negative n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

FieldElement pfq_terminating(std::span<const FieldElement> num, std::span<const FieldElement> den,
                             const FieldElement& z, int kmax) {
  if (kmax < 0) throw IndexOutOfRange("pfq_terminating with negative kmax");
  FieldElement sum(1);
  FieldElement term(1);
  for (int k = 1; k <= kmax; ++k) {
    // term_k = term_{k-1} * prod(a_j + k - 1) / (k prod(b_j + k - 1)) * z
    FieldElement numer = z;
    for (const auto& a : num) numer *= a + FieldElement(k - 1);
    if (numer.is_zero()) break;
    FieldElement denom(k);
    for (const auto& b : den) denom *= b + FieldElement(k - 1);
    if (denom.is_zero()) throw ZeroDenominatorPochhammer(k, "pfq_terminating");
    term *= numer / denom;
    sum += term;
  }
  return sum;
}

}  // namespace tdpair
