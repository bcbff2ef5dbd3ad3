#pragma once

#include <gmpxx.h>

#include <span>

#include "tdpair/field.hpp"

namespace tdpair {

/// Rising factorial (x)_k = x(x+1)...(x+k-1), with (x)_0 = 1.
FieldElement pochhammer(const FieldElement& x, int k);

/// Binomial coefficient; zero when k < 0 or k > n. Requires n >= 0.
mpz_class binomial(long n, long k);

/// Terminating generalized hypergeometric sum
///   sum_{k=0}^{K} prod (a_j)_k / ((1)_k prod (b_j)_k) z^k
/// where K is kmax or the first index past which a numerator Pochhammer
/// vanishes, whichever comes first. Throws ZeroDenominatorPochhammer(k) if a
/// denominator Pochhammer vanishes at a term whose numerator does not.
FieldElement pfq_terminating(std::span<const FieldElement> num, std::span<const FieldElement> den,
                             const FieldElement& z, int kmax);

}  // namespace tdpair
