#include "tdpair/cob.hpp"

#include "tdpair/combinatorics.hpp"
#include "tdpair/errors.hpp"
#include "tdpair/tdcore.hpp"

namespace tdpair {

namespace {

FieldElement sign_power(int e) { return FieldElement((e % 2 == 0) ? 1 : -1); }

FieldElement checked_inverse_pochhammer(const FieldElement& x, int k, const char* where) {
  FieldElement d = pochhammer(x, k);
  if (d.is_zero()) throw ZeroDenominatorPochhammer(k, where);
  return d.inverse();
}

FieldElement coeff_C(const TDParameters& P, const MultiIndex& n, const MultiIndex& x) {
  if (!x.pointwise_le(n)) return FieldElement(0);
  const int N = static_cast<int>(P.N());
  const int dn = n.total() - x.total();
  FieldElement out = sign_power(dn) * checked_inverse_pochhammer(FieldElement(2 * x.total() + 1) + P.omega, dn, "C");
  for (int p = 1; p <= N; ++p) {
    const auto pp = static_cast<std::size_t>(p);
    out *= FieldElement(Rational(binomial(n.at1(pp), x.at1(pp))));
    const int base = n.partial_sum(1, p - 1) + x.partial_sum(1, p) + P.shape.partial_sum(p, N) + 1;
    out *= pochhammer(FieldElement(base) + P.a_at(pp) + P.omega, n.at1(pp) - x.at1(pp));
    if (out.is_zero()) return out;
  }
  return out;
}

FieldElement coeff_Cbar(const TDParameters& P, const MultiIndex& x, const MultiIndex& n) {
  if (!n.pointwise_le(x)) return FieldElement(0);
  const int N = static_cast<int>(P.N());
  const int dx = x.total() - n.total();
  FieldElement out = checked_inverse_pochhammer(FieldElement(n.total() + x.total()) + P.omega, dx, "Cbar");
  for (int p = 1; p <= N; ++p) {
    const auto pp = static_cast<std::size_t>(p);
    out *= FieldElement(Rational(binomial(x.at1(pp), n.at1(pp))));
    const int base = n.partial_sum(1, p) + x.partial_sum(1, p - 1) + P.shape.partial_sum(p, N) + 1;
    out *= pochhammer(FieldElement(base) + P.a_at(pp) + P.omega, x.at1(pp) - n.at1(pp));
    if (out.is_zero()) return out;
  }
  return out;
}

FieldElement coeff_D(const TDParameters& P, const MultiIndex& n, const MultiIndex& i) {
  if (!n.pointwise_le(i)) return FieldElement(0);
  const int N = static_cast<int>(P.N());
  const int di = i.total() - n.total();
  FieldElement out =
      sign_power(di) * checked_inverse_pochhammer(FieldElement(i.total() + n.total()) + P.omega_star, di, "D");
  for (int p = 1; p <= N; ++p) {
    const auto pp = static_cast<std::size_t>(p);
    const int lp = P.shape.at1(pp);
    out *= FieldElement(Rational(binomial(lp - n.at1(pp), lp - i.at1(pp))));
    const int base = i.partial_sum(1, p - 1) + n.partial_sum(1, p) + P.shape.partial_sum(p + 1, N);
    out *= pochhammer(FieldElement(base) - P.a_at(pp) + P.omega_star, i.at1(pp) - n.at1(pp));
    if (out.is_zero()) return out;
  }
  return out;
}

FieldElement coeff_Dbar(const TDParameters& P, const MultiIndex& i, const MultiIndex& n) {
  if (!i.pointwise_le(n)) return FieldElement(0);
  const int N = static_cast<int>(P.N());
  const int dn = n.total() - i.total();
  FieldElement out = checked_inverse_pochhammer(FieldElement(2 * i.total() + 1) + P.omega_star, dn, "Dbar");
  for (int p = 1; p <= N; ++p) {
    const auto pp = static_cast<std::size_t>(p);
    const int lp = P.shape.at1(pp);
    out *= FieldElement(Rational(binomial(lp - i.at1(pp), lp - n.at1(pp))));
    const int base = n.partial_sum(1, p - 1) + i.partial_sum(1, p) + P.shape.partial_sum(p + 1, N);
    out *= pochhammer(FieldElement(base) - P.a_at(pp) + P.omega_star, n.at1(pp) - i.at1(pp));
    if (out.is_zero()) return out;
  }
  return out;
}

}  // namespace

std::string to_string(CobKind kind) {
  switch (kind) {
    case CobKind::C:
      return "C";
    case CobKind::Cbar:
      return "Cbar";
    case CobKind::D:
      return "D";
    case CobKind::Dbar:
      return "Dbar";
  }
  return "?";
}

CobKind parse_cob_kind(const std::string& name) {
  if (name == "C") return CobKind::C;
  if (name == "Cbar") return CobKind::Cbar;
  if (name == "D") return CobKind::D;
  if (name == "Dbar") return CobKind::Dbar;
  throw ParseError("unknown change-of-basis kind '" + name + "'");
}

FieldElement cob_coefficient_unchecked(const TDParameters& params, CobKind kind, const MultiIndex& first,
                                       const MultiIndex& second) {
  if (!params.shape.contains(first) || !params.shape.contains(second)) {
    throw IndexOutOfRange("coefficient indices " + first.to_string() + ", " + second.to_string() + " outside box");
  }
  switch (kind) {
    case CobKind::C:
      return coeff_C(params, first, second);
    case CobKind::Cbar:
      return coeff_Cbar(params, first, second);
    case CobKind::D:
      return coeff_D(params, first, second);
    case CobKind::Dbar:
      return coeff_Dbar(params, first, second);
  }
  return FieldElement(0);
}

FieldElement cob_coefficient(const TDParameters& params, CobKind kind, const MultiIndex& first,
                             const MultiIndex& second) {
  require_valid(params);
  return cob_coefficient_unchecked(params, kind, first, second);
}

ExactMatrix cob_matrix_unchecked(const TDParameters& params, CobKind kind) {
  auto basis = params.basis();
  ExactMatrix m(basis);
  for (std::size_t r = 0; r < basis->size(); ++r) {
    for (std::size_t c = 0; c < basis->size(); ++c) {
      const MultiIndex& rows = (*basis)[r];
      const MultiIndex& cols = (*basis)[c];
      // Skip pairs outside the triangular support without evaluating.
      const bool lower = kind == CobKind::C || kind == CobKind::Cbar;
      if (lower ? !cols.pointwise_le(rows) : !rows.pointwise_le(cols)) continue;
      m.set(r, c, cob_coefficient_unchecked(params, kind, rows, cols));
    }
  }
  return m;
}

ExactMatrix cob_matrix(const TDParameters& params, CobKind kind) {
  require_valid(params);
  return cob_matrix_unchecked(params, kind);
}

ExactMatrix eigenbasis_matrix(const TDParameters& params, Eigenbasis which) {
  return cob_matrix(params, which == Eigenbasis::A_basis ? CobKind::C : CobKind::D);
}

namespace {

ExactMatrix astar_in_vx(const TDParameters& P) {
  auto basis = P.basis();
  const Shape& shape = P.shape;
  const std::size_t N = P.N();
  ExactMatrix m(basis);
  auto e = [N](std::size_t p) { return MultiIndex::unit(N, p); };
  auto C = [&](const MultiIndex& a, const MultiIndex& b) { return cob_coefficient_unchecked(P, CobKind::C, a, b); };
  auto Cb = [&](const MultiIndex& a, const MultiIndex& b) {
    return cob_coefficient_unchecked(P, CobKind::Cbar, a, b);
  };
  auto xis = [&](const MultiIndex& n, std::size_t p) { return xi(P, n, p, true); };

  for (const MultiIndex& x : *basis) {
    const int lx = x.total();
    const FieldElement th = eigenvalue(P, lx, true);
    m.add_if_inside(x, x, th);
    for (std::size_t p = 1; p <= N; ++p) {
      const MultiIndex down = x - e(p);
      if (shape.contains(down)) m.add_if_inside(down, x, xis(down, p));
      const MultiIndex up = x + e(p);
      if (shape.contains(up)) m.add_if_inside(up, x, th * Cb(up, x) + eigenvalue(P, lx + 1, true) * C(up, x));
    }
    for (std::size_t p = 1; p <= N; ++p) {
      for (std::size_t q = 1; q <= N; ++q) {
        const MultiIndex y = x + e(p) - e(q);
        if (!shape.contains(y)) continue;
        FieldElement coef(0);
        const MultiIndex xq = x - e(q);
        if (shape.contains(xq)) coef += xis(xq, q) * Cb(y, xq);
        const MultiIndex xp = x + e(p);
        if (shape.contains(xp)) coef += xis(y, q) * C(xp, x);
        m.add_if_inside(y, x, coef);
      }
    }
    for (std::size_t p = 1; p <= N; ++p) {
      for (std::size_t q = 1; q <= N; ++q) {
        for (std::size_t r = q; r <= N; ++r) {
          const MultiIndex top = x + e(q) + e(r);
          const MultiIndex y = top - e(p);
          if (!shape.contains(y)) continue;
          FieldElement coef(0);
          // n runs over the pointwise box [x, x + e_q + e_r].
          for (const MultiIndex& n : *basis) {
            if (!x.pointwise_le(n) || !n.pointwise_le(top)) continue;
            const MultiIndex np = n - e(p);
            if (!shape.contains(np)) continue;
            coef += xis(np, p) * C(n, x) * Cb(y, np);
          }
          m.add_if_inside(y, x, coef);
        }
      }
    }
  }
  return m;
}

ExactMatrix a_in_vi(const TDParameters& P) {
  auto basis = P.basis();
  const Shape& shape = P.shape;
  const std::size_t N = P.N();
  ExactMatrix m(basis);
  auto e = [N](std::size_t p) { return MultiIndex::unit(N, p); };
  auto D = [&](const MultiIndex& a, const MultiIndex& b) { return cob_coefficient_unchecked(P, CobKind::D, a, b); };
  auto Db = [&](const MultiIndex& a, const MultiIndex& b) {
    return cob_coefficient_unchecked(P, CobKind::Dbar, a, b);
  };
  auto xin = [&](const MultiIndex& n, std::size_t p) { return xi(P, n, p, false); };

  for (const MultiIndex& i : *basis) {
    const int li = i.total();
    const FieldElement th = eigenvalue(P, li, false);
    m.add_if_inside(i, i, th);
    for (std::size_t p = 1; p <= N; ++p) {
      const MultiIndex up = i + e(p);
      if (shape.contains(up)) m.add_if_inside(up, i, xin(up, p));
      const MultiIndex down = i - e(p);
      if (shape.contains(down)) {
        m.add_if_inside(down, i, th * Db(down, i) + eigenvalue(P, li - 1, false) * D(down, i));
      }
    }
    for (std::size_t p = 1; p <= N; ++p) {
      for (std::size_t q = 1; q <= N; ++q) {
        const MultiIndex j = i - e(p) + e(q);
        if (!shape.contains(j)) continue;
        FieldElement coef(0);
        const MultiIndex iq = i + e(q);
        if (shape.contains(iq)) coef += xin(iq, q) * Db(j, iq);
        const MultiIndex ip = i - e(p);
        if (shape.contains(ip)) coef += xin(j, q) * D(ip, i);
        m.add_if_inside(j, i, coef);
      }
    }
    for (std::size_t p = 1; p <= N; ++p) {
      for (std::size_t q = 1; q <= N; ++q) {
        for (std::size_t r = q; r <= N; ++r) {
          const MultiIndex bottom = i - e(q) - e(r);
          const MultiIndex j = i + e(p) - e(q) - e(r);
          if (!shape.contains(j)) continue;
          FieldElement coef(0);
          for (const MultiIndex& n : *basis) {
            if (!bottom.pointwise_le(n) || !n.pointwise_le(i)) continue;
            const MultiIndex np = n + e(p);
            if (!shape.contains(np)) continue;
            coef += xin(np, p) * D(n, i) * Db(j, np);
          }
          m.add_if_inside(j, i, coef);
        }
      }
    }
  }
  return m;
}

}  // namespace

ExactMatrix block_tridiagonal_explicit(const TDParameters& params, BlockForm which) {
  require_valid(params);
  return which == BlockForm::Astar_in_Vx ? astar_in_vx(params) : a_in_vi(params);
}

ExactMatrix block_tridiagonal_conjugated(const TDParameters& params, BlockForm which) {
  require_valid(params);
  if (which == BlockForm::Astar_in_Vx) {
    return cob_matrix_unchecked(params, CobKind::Cbar) * assemble_operator(params, Operator::Astar) *
           cob_matrix_unchecked(params, CobKind::C);
  }
  return cob_matrix_unchecked(params, CobKind::Dbar) * assemble_operator(params, Operator::A) *
         cob_matrix_unchecked(params, CobKind::D);
}

ExactMatrix block_tridiagonal_form(const TDParameters& params, BlockForm which) {
  const ExactMatrix explicit_form = block_tridiagonal_explicit(params, which);
  const ExactMatrix conjugated = block_tridiagonal_conjugated(params, which);
  const Basis& basis = explicit_form.basis();
  std::string offender;
  conjugated.for_each([&](std::size_t r, std::size_t c, const FieldElement& v) {
    const int gap = basis[r].total() - basis[c].total();
    if (offender.empty() && (gap >= 2 || gap <= -2)) {
      offender = "entry (" + basis[r].to_string() + "," + basis[c].to_string() + ") = " + v.to_string() +
                 " couples levels " + std::to_string(basis[c].total()) + " and " + std::to_string(basis[r].total());
    }
  });
  if (!offender.empty()) throw StructureViolation(offender);
  if (auto diff = explicit_form.first_difference(conjugated)) {
    throw StructureViolation("explicit and conjugated routes differ at (" + basis[diff->row].to_string() + "," +
                             basis[diff->col].to_string() + "): " + diff->lhs.to_string() + " vs " +
                             diff->rhs.to_string());
  }
  return explicit_form;
}

}  // namespace tdpair
