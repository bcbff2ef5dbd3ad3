#include <random>
#include <vector>

#include "doctest.h"
#include "tdpair/combinatorics.hpp"
#include "tdpair/errors.hpp"
#include "tdpair/field.hpp"
#include "fixtures.hpp"

using namespace tdpair;
using fixtures::q;

namespace {

FieldElement random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return FieldElement(Rational(num(rng), den(rng)));
}

FieldElement random_function(std::mt19937_64& rng) {
  const FieldElement t = FieldElement::variable();
  FieldElement n = random_rational(rng, 5) + random_rational(rng, 5) * t + random_rational(rng, 5) * t * t;
  FieldElement d = FieldElement(1) + random_rational(rng, 5) * t;
  return n / d;
}

}  // namespace

TEST_CASE("rational parsing and normalization") {
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK(Rational::parse("-3/7").to_string() == "-3/7");
  CHECK(Rational::parse("0/5").to_string() == "0");
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(q("5"), 0) == q("1"));
  CHECK(pochhammer(q("-2"), 3) == q("0"));
  CHECK(pochhammer(q("1/2"), 2) == q("3/4"));
  CHECK(pochhammer(q("1"), 5) == q("120"));
}

TEST_CASE("pochhammer splits over consecutive ranges") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldElement x = random_rational(rng, 9);
    for (int j = 0; j <= 20; j += 4) {
      for (int k = 0; k <= 20; k += 5) {
        CHECK(pochhammer(x, j + k) == pochhammer(x, j) * pochhammer(x + FieldElement(j), k));
      }
    }
  }
  const FieldElement t = FieldElement::variable();
  CHECK(pochhammer(t, 3) == t * (t + FieldElement(1)) * (t + FieldElement(2)));
}

TEST_CASE("binomial examples") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("terminating hypergeometric sums") {
  auto F = [](std::vector<FieldElement> num, std::vector<FieldElement> den, FieldElement z, int kmax = 50) {
    return pfq_terminating(num, den, z, kmax);
  };
  // 1 + (-1)(-1)/((1)(-2)) = 1 - 1/2.
  CHECK(F({q("-1"), q("-1")}, {q("-2")}, q("1")) == q("1/2"));
  CHECK(F({q("0"), q("3/2"), q("7"), q("-4")}, {q("1/3"), q("2"), q("5")}, q("1")) == q("1"));
  // 2F1(-i, -x; -l; 1) at (i, x, l) = (1, 1, 2) against the brute-force term sum.
  CHECK(F({q("-1"), q("-1")}, {q("-2")}, q("1")) == FieldElement(1) + q("-1") * q("-1") / q("-2"));
  // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n.
  for (int n = 0; n <= 6; ++n) {
    const FieldElement b = q("5/3"), c = q("-17/2");
    CHECK(F({FieldElement(-n), b}, {c}, q("1")) == pochhammer(c - b, n) / pochhammer(c, n));
  }
  // kmax truncation of a nonterminating sum: exp-like series 0F0 is not used; 1F0(1;;z) = sum z^k.
  CHECK(F({q("1")}, {}, q("1/2"), 3) == q("15/8"));
}

TEST_CASE("vanishing lower parameter is reported with its index") {
  try {
    pfq_terminating(std::vector<FieldElement>{q("-3"), q("1")}, std::vector<FieldElement>{q("-1")}, q("1"), 10);
    FAIL("expected ZeroDenominatorPochhammer");
  } catch (const ZeroDenominatorPochhammer& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("limit_at_zero examples") {
  const FieldElement t = FieldElement::variable();
  CHECK(limit_at_zero((FieldElement(3) * t + FieldElement(6)) / (t + FieldElement(2))) == Rational(3));
  CHECK(limit_at_zero(t / t) == Rational(1));
  CHECK_THROWS_AS(limit_at_zero(FieldElement(1) / t), PoleAtZero);
  CHECK(limit_at_zero((t * t + t) / t) == Rational(1));
  CHECK(((FieldElement(3) * t + FieldElement(6)) / (t + FieldElement(2))).is_rational());
}

TEST_CASE("rational function normal form") {
  const FieldElement t = FieldElement::variable();
  const FieldElement f = (t * t - FieldElement(1)) / (FieldElement(2) * t - FieldElement(2));
  CHECK(f == (t + FieldElement(1)) / FieldElement(2));
  CHECK(f.as_function().denominator().degree() == 0);
  CHECK(f.to_string() == "1/2*t + 1/2");
  CHECK_THROWS_AS(FieldElement(0).inverse(), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldElement x = trial % 2 ? random_function(rng) : random_rational(rng, 7);
    const FieldElement y = random_function(rng);
    const FieldElement z = random_function(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == FieldElement(0));
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("hypergeometric sum commutes with the t -> 0 limit") {
  std::mt19937_64 rng(3);
  const FieldElement t = FieldElement::variable();
  int compared = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + trial % 4;
    std::vector<FieldElement> num{FieldElement(-m), random_rational(rng, 6) + random_rational(rng, 6) * t};
    std::vector<FieldElement> den{random_rational(rng, 6) + random_rational(rng, 6) * t};
    std::vector<FieldElement> num0, den0;
    for (auto& v : num) num0.emplace_back(limit_at_zero(v));
    for (auto& v : den) den0.emplace_back(limit_at_zero(v));
    FieldElement at_limit;
    try {
      at_limit = pfq_terminating(num0, den0, FieldElement(1), m);
    } catch (const ZeroDenominatorPochhammer&) {
      continue;
    }
    const FieldElement over_t = pfq_terminating(num, den, FieldElement(1), m);
    CHECK(limit_at_zero(over_t) == at_limit.rational());
    ++compared;
  }
  CHECK(compared > 20);
}
