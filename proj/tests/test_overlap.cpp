#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "tdpair/cob.hpp"
#include "tdpair/combinatorics.hpp"
#include "tdpair/errors.hpp"
#include "tdpair/overlap.hpp"
#include "tdpair/tdcore.hpp"
#include "tdpair/verify.hpp"

using namespace tdpair;
using fixtures::q;

namespace {

std::vector<TDParameters> sweep(const std::vector<std::vector<int>>& shapes, int draws, std::uint64_t base) {
  std::vector<TDParameters> out;
  for (const auto& ell : shapes) {
    for (int s = 0; s < draws; ++s) out.push_back(random_valid_parameters(Shape(ell), base + s, 10));
  }
  return out;
}

const std::vector<std::vector<int>> kShapes{{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 1, 1}};

ExactMatrix table(std::vector<std::vector<const char*>> rows, const TDParameters& P) {
  ExactMatrix m(P.basis());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, q(rows[r][c]));
  }
  return m;
}

}  // namespace

TEST_CASE("reference tables") {
  const TDParameters P = fixtures::reference_instance();
  const ExactMatrix T = table({{"1", "3"}, {"1", "4"}}, P);
  const ExactMatrix U = table({{"4", "-1"}, {"-3", "1"}}, P);
  for (TMethod m : {TMethod::direct_sum, TMethod::matrix_product, TMethod::shift_operator}) {
    CHECK(overlap_T_table(P, m) == T);
  }
  for (UMethod m : {UMethod::direct_sum, UMethod::shift_operator, UMethod::linear_solve}) {
    CHECK(overlap_U_table(P, m) == U);
  }
  CHECK(overlap_U(P, MultiIndex{0}, MultiIndex{0}, UMethod::direct_sum) == q("4"));
  // sum_x T_0(x) U_1(x) = 1*(-3) + 3*1.
  CHECK(T.at(0, 0) * U.at(1, 0) + T.at(0, 1) * U.at(1, 1) == q("0"));
  CHECK(T * U.transpose() == ExactMatrix::identity(P.basis()));
}

TEST_CASE("trivial corner and validation") {
  for (const auto& P : sweep(kShapes, 1, 40)) {
    const MultiIndex zero(P.N());
    for (TMethod m : {TMethod::direct_sum, TMethod::matrix_product, TMethod::shift_operator}) {
      CHECK(overlap_T(P, zero, zero, m) == q("1"));
    }
  }
  TDParameters bad = fixtures::reference_instance();
  bad.h_star = q("0");
  CHECK_THROWS_AS(overlap_T(bad, MultiIndex{0}, MultiIndex{0}, TMethod::direct_sum), InvalidParameters);
  CHECK_THROWS_AS(overlap_U(fixtures::reference_instance(), MultiIndex{2}, MultiIndex{0}, UMethod::direct_sum),
                  IndexOutOfRange);
}

TEST_CASE("three routes agree and reproduce the basis identities") {
  for (const auto& P : sweep(kShapes, 3, 60)) {
    const ExactMatrix T = overlap_T_table(P, TMethod::direct_sum);
    CHECK(overlap_T_table(P, TMethod::matrix_product) == T);
    CHECK(overlap_T_table(P, TMethod::shift_operator) == T);
    const ExactMatrix U = overlap_U_table(P, UMethod::linear_solve);
    CHECK(overlap_U_table(P, UMethod::direct_sum) == U);
    CHECK(overlap_U_table(P, UMethod::shift_operator) == U);
    const ExactMatrix C = cob_matrix(P, CobKind::C);
    const ExactMatrix D = cob_matrix(P, CobKind::D);
    CHECK(D == C * T.transpose());
    CHECK(C == D * U);
    CHECK(T * U.transpose() == ExactMatrix::identity(P.basis()));
  }
}

TEST_CASE("the U product shifts downward") {
  int forward_mismatch = 0;
  for (const auto& P : sweep({{1, 1}, {2, 1}, {1, 1, 1}}, 2, 80)) {
    for (const auto& i : *P.basis()) {
      for (const auto& x : *P.basis()) {
        const FieldElement truth = overlap_U(P, i, x, UMethod::direct_sum);
        CHECK(overlap_U_shift_with_direction(P, i, x, -1) == truth);
        forward_mismatch += !(overlap_U_shift_with_direction(P, i, x, 1) == truth);
      }
    }
  }
  CHECK(forward_mismatch > 0);
  // With one factor nothing sits to the right of Z, so the sign is invisible.
  const TDParameters P = random_valid_parameters(Shape({3}), 5, 10);
  for (const auto& i : *P.basis()) {
    for (const auto& x : *P.basis()) {
      CHECK(overlap_U_shift_with_direction(P, i, x, 1) == overlap_U_shift_with_direction(P, i, x, -1));
    }
  }
}

TEST_CASE("shifted functional bookkeeping") {
  ShiftedFunctional op(2);
  op.apply_factor(1, 1, [](const MultiIndex&) { return std::vector<FieldElement>{q("2"), q("3")}; });
  CHECK(op.size() == 2);
  std::vector<MultiIndex> seen;
  op.apply_factor(2, -1, [&](const MultiIndex& s) {
    seen.push_back(s);
    return std::vector<FieldElement>{FieldElement(s[0] + 1), q("1")};
  });
  CHECK(seen == std::vector<MultiIndex>{{0, 0}, {1, 0}});
  // (2 + 3 Z1)(c(s) + Z2) on 1 = 2*(1 + 1) + 3*(2 + 1).
  CHECK(op.on_constant_one() == q("13"));
  CHECK(op.size() == 4);
}

TEST_CASE("Racah factor expansion") {
  RacahFactorSpec f{2, 1, q("1/2"), q("3"), q("-1"), q("5/2"), 3};
  const auto c = f.expansion();
  REQUIRE(c.size() == 2);
  // C(3,2) (b1)_2 (b2)_1 = 3 * 0 * 5/2; the k = 1 term keeps (b1+1)_1 (b2+1)_0.
  CHECK(c[0] == q("0"));
  CHECK(c[1] == q("3") * q("-2") * q("-1") * q("1/2") * q("3") / q("-3") * q("0"));
  RacahFactorSpec g{1, 1, q("1/2"), q("3"), q("2"), q("5/2"), 3};
  CHECK(g.expansion()[1] == q("3") * q("-1") * q("-1") * q("1/2") * q("3") / q("-3"));
}

TEST_CASE("univariate Racah forms") {
  for (const auto& P : sweep({{1}, {2}, {3}, {4}}, 5, 200)) {
    const int l = P.shape.at1(1);
    for (int i = 0; i <= l; ++i) {
      for (int x = 0; x <= l; ++x) {
        const MultiIndex I{i}, X{x};
        const FieldElement u = overlap_U(P, I, X, UMethod::linear_solve);
        CHECK(racah_T_univariate(P, i, x) == overlap_T(P, I, X, TMethod::direct_sum));
        CHECK(racah_U_before_whipple(P, i, x) == u);
        CHECK(racah_U_after_whipple(P, i, x) == u);
      }
    }
  }
  CHECK_THROWS_AS(racah_T_univariate(random_valid_parameters(Shape({1, 1}), 1, 10), 0, 0), InvalidShape);
}

TEST_CASE("alternative post-Whipple normalization differs by a fixed factor") {
  auto P_ = [](const FieldElement& v, int k) { return pochhammer(v, k); };
  auto F = [](const FieldElement& v) { return v; };
  for (const auto& P : sweep({{1}, {2}, {3}}, 3, 300)) {
    const int l = P.shape.at1(1);
    const FieldElement &a = P.a_at(1), &w = P.omega, &ws = P.omega_star;
    for (int i = 0; i <= l; ++i) {
      for (int x = 0; x <= l; ++x) {
        const FieldElement I(i), X(x), L(l), one(1);
        const FieldElement alt_norm =
            FieldElement(x % 2 ? -1 : 1) * P_(F(-L), x) / P_(one, x) * P_(one - a + ws, l - i) *
            P_(I - L - a - w + ws, l - i) * P_(I + a + one, l - i) /
            (P_(FieldElement(2 * i + 1) + ws, l - i) * P_(FieldElement(-2 * l) - a - w, l - i) *
             P_(one - L + a - ws, l - i)) *
            P_(X + L + a + w + one, l - x) * P_(one - X + a - ws, x) * P_(F(-X) - L - a - w, x) /
            (P_(FieldElement(2 * x + 1) + w, l - x) * P_(a + w - ws + one, x) * P_(F(-L) - a, x));
        const FieldElement num[] = {F(-I), I + ws, F(-X), X + w};
        const FieldElement den[] = {F(-L), ws - a, L + a + w + one};
        const FieldElement alternative = alt_norm * pfq_terminating(num, den, one, l);
        const FieldElement u = overlap_U(P, MultiIndex{i}, MultiIndex{x}, UMethod::direct_sum);
        const FieldElement factor =
            FieldElement((x + l) % 2 ? -1 : 1) * P_(one - a + ws, l - i) / P_(I - a + ws, l - i);
        CHECK(alternative == u * factor);
        if (i == 0) CHECK_FALSE(factor == one);
      }
    }
  }
}

TEST_CASE("Hahn kind as the limit of the general kind") {
  for (const auto& P : sweep({{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}, 2, 400)) {
    for (const auto& i : *P.basis()) {
      for (const auto& x : *P.basis()) {
        const FieldElement hahn = overlap_limit_kind(P, LimitKind::hahn, i, x);
        CHECK(FieldElement(limit_of_overlap(P, LimitKind::hahn, i, x)) == hahn);
      }
    }
  }
}

TEST_CASE("Krawtchouk kind as the limit of the Hahn kind") {
  for (const auto& P : sweep({{1}, {3}, {1, 1}, {2, 1}, {3, 2}, {1, 1, 1}}, 2, 500)) {
    for (const auto& i : *P.basis()) {
      for (const auto& x : *P.basis()) {
        const FieldElement k = overlap_limit_kind(P, LimitKind::krawtchouk, i, x);
        CHECK(FieldElement(limit_of_overlap(P, LimitKind::krawtchouk, i, x)) == k);
        // Chu-Vandermonde collapses each factor to (-1)^{i_p} C(l_p - x_p, i_p).
        FieldElement collapsed(1);
        for (std::size_t p = 1; p <= P.N(); ++p) {
          collapsed *= FieldElement(Rational(binomial(P.shape.at1(p) - x.at1(p), i.at1(p)))) *
                       FieldElement(i.at1(p) % 2 ? -1 : 1);
        }
        CHECK(k == collapsed);
      }
    }
  }
  const TDParameters P = random_valid_parameters(Shape({2, 3}), 1, 10);
  CHECK(overlap_limit_kind(P, LimitKind::krawtchouk, MultiIndex{0, 2}, MultiIndex{1, 3}) ==
        overlap_limit_kind(P, LimitKind::krawtchouk, MultiIndex{0, 2}, MultiIndex{0, 3}));
}

TEST_CASE("overlap functions do not depend on h, h* or theta0") {
  const TDParameters P = random_valid_parameters(Shape({2, 1}), 8, 10);
  TDParameters Q = P;
  Q.h = q("17/3");
  Q.h_star = q("-2/9");
  Q.theta0 = q("5");
  Q.theta0_star = q("-11");
  CHECK(overlap_T_table(P, TMethod::direct_sum) == overlap_T_table(Q, TMethod::matrix_product));
  CHECK(overlap_U_table(P, UMethod::linear_solve) == overlap_U_table(Q, UMethod::linear_solve));
}
