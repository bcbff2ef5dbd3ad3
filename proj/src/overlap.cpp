#include "tdpair/overlap.hpp"

#include "parallel.hpp"
#include "tdpair/cob.hpp"
#include "tdpair/combinatorics.hpp"
#include "tdpair/errors.hpp"
#include "tdpair/tdcore.hpp"

namespace tdpair {

namespace {

FieldElement sign_power(int e) { return FieldElement((e % 2 == 0) ? 1 : -1); }

FieldElement inv_pochhammer(const FieldElement& x, int k, const char* where) {
  FieldElement d = pochhammer(x, k);
  if (d.is_zero()) throw ZeroDenominatorPochhammer(k, where);
  return d.inverse();
}

FieldElement binom(int n, int k) { return FieldElement(Rational(binomial(n, k))); }

// Visits every n with lo <= n <= hi pointwise.
template <class Fn>
void for_each_in_box(const MultiIndex& lo, const MultiIndex& hi, Fn&& fn) {
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (lo[k] > hi[k]) return;
  }
  MultiIndex n = lo;
  for (bool done = false; !done;) {
    fn(n);
    std::size_t k = 0;
    while (k < n.size() && n[k] == hi[k]) {
      n[k] = lo[k];
      ++k;
    }
    if (k == n.size()) done = true;
    else ++n[k];
  }
}

void check_indices(const TDParameters& P, const MultiIndex& i, const MultiIndex& x) {
  if (!P.shape.contains(i) || !P.shape.contains(x)) {
    throw IndexOutOfRange("overlap indices " + i.to_string() + ", " + x.to_string() + " outside box " +
                          P.shape.to_string());
  }
}

FieldElement T_direct(const TDParameters& P, const MultiIndex& i, const MultiIndex& x) {
  const int N = static_cast<int>(P.N());
  const Shape& l = P.shape;
  FieldElement total(0);
  for_each_in_box(MultiIndex(P.N()), pointwise_min(i, x), [&](const MultiIndex& n) {
    FieldElement term(1);
    for (int p = 1; p <= N && !term.is_zero(); ++p) {
      const auto pp = static_cast<std::size_t>(p);
      const int ip = i.at1(pp), xp = x.at1(pp), np = n.at1(pp), lp = l.at1(pp);
      term *= pochhammer(FieldElement(-xp), np) * pochhammer(FieldElement(-ip), np) *
              pochhammer(FieldElement(-lp), ip);
      term *= inv_pochhammer(FieldElement(1), np, "T direct") * inv_pochhammer(FieldElement(-lp), np, "T direct") *
              inv_pochhammer(FieldElement(1), ip, "T direct");
      const FieldElement up_x =
          FieldElement(x.partial_sum(1, p - 1) + n.partial_sum(1, p) + l.partial_sum(p, N) + 1) + P.a_at(pp) + P.omega;
      const FieldElement down_x =
          FieldElement(x.total() + n.total() + x.partial_sum(1, p - 1) - n.partial_sum(1, p - 1)) + P.omega;
      term *= pochhammer(up_x, xp - np) * inv_pochhammer(down_x, xp - np, "T direct");
      const FieldElement up_i =
          FieldElement(i.partial_sum(1, p - 1) + n.partial_sum(1, p) + l.partial_sum(p + 1, N)) - P.a_at(pp) +
          P.omega_star;
      const FieldElement down_i =
          FieldElement(i.total() + n.total() + i.partial_sum(1, p - 1) - n.partial_sum(1, p - 1)) + P.omega_star;
      term *= pochhammer(up_i, ip - np) * inv_pochhammer(down_i, ip - np, "T direct");
    }
    total += term;
  });
  return total;
}

FieldElement T_matrix_product(const TDParameters& P, const MultiIndex& i, const MultiIndex& x) {
  FieldElement total(0);
  // D_{n,i} needs n <= i and Cbar_{x,n} needs n <= x.
  for_each_in_box(MultiIndex(P.N()), pointwise_min(i, x), [&](const MultiIndex& n) {
    total += cob_coefficient_unchecked(P, CobKind::D, n, i) * cob_coefficient_unchecked(P, CobKind::Cbar, x, n);
  });
  return total;
}

FieldElement T_shift(const TDParameters& P, const MultiIndex& i, const MultiIndex& x) {
  const int N = static_cast<int>(P.N());
  const Shape& l = P.shape;
  ShiftedFunctional op(P.N());
  for (int p = 1; p <= N; ++p) {
    const auto pp = static_cast<std::size_t>(p);
    op.apply_factor(pp, 1, [&](const MultiIndex& s) {
      const MultiIndex ii = i + s;
      const MultiIndex xx = x + s;
      RacahFactorSpec f;
      f.i = ii.at1(pp);
      f.x = xx.at1(pp);
      f.ell = l.at1(pp);
      f.a1 = FieldElement(ii.total()) + P.omega_star;
      f.a2 = FieldElement(xx.total()) + P.omega;
      f.b1 = FieldElement(ii.partial_sum(1, p - 1) + l.partial_sum(p + 1, N)) + P.omega_star - P.a_at(pp);
      f.b2 = FieldElement(xx.partial_sum(1, p - 1) + l.partial_sum(p, N) + 1) + P.omega + P.a_at(pp);
      return f.expansion();
    });
  }
  return sign_power(i.total()) * inv_pochhammer(FieldElement(i.total()) + P.omega_star, i.total(), "T shift") *
         inv_pochhammer(FieldElement(x.total()) + P.omega, x.total(), "T shift") * op.on_constant_one();
}

FieldElement U_direct(const TDParameters& P, const MultiIndex& i, const MultiIndex& x) {
  const int N = static_cast<int>(P.N());
  const Shape& l = P.shape;
  FieldElement total(0);
  for_each_in_box(pointwise_max(i, x), l.as_index(), [&](const MultiIndex& n) {
    FieldElement term(1);
    for (int p = 1; p <= N && !term.is_zero(); ++p) {
      const auto pp = static_cast<std::size_t>(p);
      const int ip = i.at1(pp), xp = x.at1(pp), np = n.at1(pp), lp = l.at1(pp);
      term *= pochhammer(FieldElement(-np), xp) * pochhammer(FieldElement(-np), ip) *
              pochhammer(FieldElement(-lp), np);
      term *= inv_pochhammer(FieldElement(1), xp, "U direct") * inv_pochhammer(FieldElement(-lp), ip, "U direct") *
              inv_pochhammer(FieldElement(1), np, "U direct");
      const FieldElement up_x =
          FieldElement(x.partial_sum(1, p) + n.partial_sum(1, p - 1) + l.partial_sum(p, N) + 1) + P.a_at(pp) + P.omega;
      const FieldElement down_x =
          FieldElement(2 * x.total() + n.partial_sum(1, p - 1) - x.partial_sum(1, p - 1) + 1) + P.omega;
      term *= pochhammer(up_x, np - xp) * inv_pochhammer(down_x, np - xp, "U direct");
      const FieldElement up_i =
          FieldElement(i.partial_sum(1, p) + n.partial_sum(1, p - 1) + l.partial_sum(p + 1, N)) - P.a_at(pp) +
          P.omega_star;
      const FieldElement down_i =
          FieldElement(2 * i.total() + n.partial_sum(1, p - 1) - i.partial_sum(1, p - 1) + 1) + P.omega_star;
      term *= pochhammer(up_i, np - ip) * inv_pochhammer(down_i, np - ip, "U direct");
    }
    total += term;
  });
  return total;
}

FieldElement U_shift(const TDParameters& P, const MultiIndex& i, const MultiIndex& x, int direction) {
  const int N = static_cast<int>(P.N());
  const Shape& l = P.shape;
  const int d = l.diameter();
  ShiftedFunctional op(P.N());
  for (int p = 1; p <= N; ++p) {
    const auto pp = static_cast<std::size_t>(p);
    op.apply_factor(pp, direction, [&](const MultiIndex& s) {
      const MultiIndex ii = i + s;
      const MultiIndex xx = x + s;
      const int lp = l.at1(pp);
      const FieldElement pre =
          sign_power(ii.at1(pp) + lp) *
          inv_pochhammer(FieldElement(2 * xx.total() + l.partial_sum(1, p - 1) - xx.partial_sum(1, p - 1) + 1) +
                             P.omega,
                         lp - xx.at1(pp), "U shift") *
          inv_pochhammer(FieldElement(2 * ii.total() + l.partial_sum(1, p - 1) - ii.partial_sum(1, p - 1) + 1) +
                             P.omega_star,
                         lp - ii.at1(pp), "U shift");
      RacahFactorSpec f;
      f.i = lp - xx.at1(pp);
      f.x = lp - ii.at1(pp);
      f.ell = lp;
      f.a1 = FieldElement(-2 * xx.total() - l.partial_sum(1, p) + xx.partial_sum(1, p)) - P.omega;
      f.a2 = FieldElement(-2 * ii.total() - l.partial_sum(1, p) + ii.partial_sum(1, p)) - P.omega_star;
      f.b1 = FieldElement(-d - xx.partial_sum(1, p - 1) - lp) - P.a_at(pp) - P.omega;
      f.b2 = FieldElement(-d - ii.partial_sum(1, p - 1) + 1) + P.a_at(pp) - P.omega_star;
      auto coeffs = f.expansion();
      for (auto& c : coeffs) c *= pre;
      return coeffs;
    });
  }
  return op.on_constant_one();
}

// Rows i, columns x: U = D^{-1} C by exact elimination.
ExactMatrix U_solve_table(const TDParameters& P) {
  return solve(cob_matrix_unchecked(P, CobKind::D), cob_matrix_unchecked(P, CobKind::C));
}

FieldElement hahn_formula(const TDParameters& P, const MultiIndex& i, const MultiIndex& x) {
  const int N = static_cast<int>(P.N());
  const Shape& l = P.shape;
  ShiftedFunctional op(P.N());
  for (int p = 1; p <= N; ++p) {
    const auto pp = static_cast<std::size_t>(p);
    op.apply_factor(pp, 1, [&](const MultiIndex& s) {
      // Z = e^{d/dx_p}: only x moves.
      const MultiIndex xx = x + s;
      const int ip = i.at1(pp), xp = xx.at1(pp), lp = l.at1(pp);
      const FieldElement a = FieldElement(xx.total()) + P.omega;
      const FieldElement b = FieldElement(xx.partial_sum(1, p - 1) + l.partial_sum(p, N) + 1) + P.omega + P.a_at(pp);
      std::vector<FieldElement> coeffs;
      const FieldElement c0 = binom(lp, ip);
      for (int k = 0; k <= std::min(ip, xp); ++k) {
        coeffs.push_back(c0 * pochhammer(FieldElement(-ip), k) * pochhammer(FieldElement(-xp), k) *
                         pochhammer(a, k) * inv_pochhammer(FieldElement(1), k, "hahn") *
                         inv_pochhammer(FieldElement(-lp), k, "hahn") * pochhammer(b + FieldElement(k), xp - k));
      }
      return coeffs;
    });
  }
  return sign_power(i.total()) * inv_pochhammer(FieldElement(x.total()) + P.omega, x.total(), "hahn") *
         op.on_constant_one();
}

FieldElement krawtchouk_formula(const TDParameters& P, const MultiIndex& i, const MultiIndex& x) {
  FieldElement out(1);
  for (std::size_t p = 1; p <= P.N(); ++p) {
    const int ip = i.at1(p), xp = x.at1(p), lp = P.shape.at1(p);
    const FieldElement num[] = {FieldElement(-ip), FieldElement(-xp)};
    const FieldElement den[] = {FieldElement(-lp)};
    out *= pochhammer(FieldElement(-lp), ip) * inv_pochhammer(FieldElement(1), ip, "krawtchouk") *
           pfq_terminating(num, den, FieldElement(1), lp);
  }
  return out;
}

void require_univariate(const TDParameters& P, int i, int x) {
  if (P.N() != 1) throw InvalidShape("univariate Racah form needs N = 1, got shape " + P.shape.to_string());
  const int l = P.shape.at1(1);
  if (i < 0 || x < 0 || i > l || x > l) {
    throw IndexOutOfRange("univariate indices (" + std::to_string(i) + "," + std::to_string(x) + ") outside 0.." +
                          std::to_string(l));
  }
}

}  // namespace

std::vector<FieldElement> RacahFactorSpec::expansion() const {
  std::vector<FieldElement> out;
  const FieldElement lead = binom(ell, i);
  for (int k = 0; k <= std::min(i, x); ++k) {
    out.push_back(lead * pochhammer(FieldElement(-i), k) * pochhammer(FieldElement(-x), k) * pochhammer(a1, k) *
                  pochhammer(a2, k) * inv_pochhammer(FieldElement(1), k, "Racah factor") *
                  inv_pochhammer(FieldElement(-ell), k, "Racah factor") * pochhammer(b1 + FieldElement(k), i - k) *
                  pochhammer(b2 + FieldElement(k), x - k));
  }
  return out;
}

ShiftedFunctional::ShiftedFunctional(std::size_t n) : n_(n) { table_.emplace(MultiIndex(n), FieldElement(1)); }

void ShiftedFunctional::apply_factor(
    std::size_t p, int step, const std::function<std::vector<FieldElement>(const MultiIndex& offset)>& coefficients) {
  std::map<MultiIndex, FieldElement> next;
  for (const auto& [offset, weight] : table_) {
    const std::vector<FieldElement> c = coefficients(offset);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      MultiIndex moved = offset;
      moved[p - 1] += step * static_cast<int>(k);
      next[moved] += weight * c[k];
    }
  }
  table_ = std::move(next);
}

FieldElement ShiftedFunctional::on_constant_one() const {
  FieldElement total(0);
  for (const auto& entry : table_) total += entry.second;
  return total;
}

std::string to_string(TMethod m) {
  switch (m) {
    case TMethod::direct_sum:
      return "direct_sum";
    case TMethod::matrix_product:
      return "matrix_product";
    case TMethod::shift_operator:
      return "shift_operator";
  }
  return "?";
}

std::string to_string(UMethod m) {
  switch (m) {
    case UMethod::direct_sum:
      return "direct_sum";
    case UMethod::shift_operator:
      return "shift_operator";
    case UMethod::linear_solve:
      return "linear_solve";
  }
  return "?";
}

std::string to_string(LimitKind k) { return k == LimitKind::hahn ? "hahn" : "krawtchouk"; }

TMethod parse_t_method(const std::string& name) {
  if (name == "direct_sum") return TMethod::direct_sum;
  if (name == "matrix_product") return TMethod::matrix_product;
  if (name == "shift_operator") return TMethod::shift_operator;
  throw ParseError("unknown T method '" + name + "'");
}

UMethod parse_u_method(const std::string& name) {
  if (name == "direct_sum") return UMethod::direct_sum;
  if (name == "shift_operator") return UMethod::shift_operator;
  if (name == "linear_solve") return UMethod::linear_solve;
  throw ParseError("unknown U method '" + name + "'");
}

LimitKind parse_limit_kind(const std::string& name) {
  if (name == "hahn") return LimitKind::hahn;
  if (name == "krawtchouk") return LimitKind::krawtchouk;
  throw ParseError("unknown limit kind '" + name + "'");
}

FieldElement overlap_T_unchecked(const TDParameters& params, const MultiIndex& i, const MultiIndex& x,
                                 TMethod method) {
  check_indices(params, i, x);
  switch (method) {
    case TMethod::direct_sum:
      return T_direct(params, i, x);
    case TMethod::matrix_product:
      return T_matrix_product(params, i, x);
    case TMethod::shift_operator:
      return T_shift(params, i, x);
  }
  return FieldElement(0);
}

FieldElement overlap_U_unchecked(const TDParameters& params, const MultiIndex& i, const MultiIndex& x,
                                 UMethod method) {
  check_indices(params, i, x);
  switch (method) {
    case UMethod::direct_sum:
      return U_direct(params, i, x);
    case UMethod::shift_operator:
      return U_shift(params, i, x, kUShiftDirection);
    case UMethod::linear_solve: {
      const auto basis = params.basis();
      return U_solve_table(params).at(*basis->position(i), *basis->position(x));
    }
  }
  return FieldElement(0);
}

FieldElement overlap_U_shift_with_direction(const TDParameters& params, const MultiIndex& i, const MultiIndex& x,
                                            int direction) {
  require_valid(params);
  check_indices(params, i, x);
  return U_shift(params, i, x, direction);
}

FieldElement overlap_T(const TDParameters& params, const MultiIndex& i, const MultiIndex& x, TMethod method) {
  require_valid(params);
  return overlap_T_unchecked(params, i, x, method);
}

FieldElement overlap_U(const TDParameters& params, const MultiIndex& i, const MultiIndex& x, UMethod method) {
  require_valid(params);
  return overlap_U_unchecked(params, i, x, method);
}

ExactMatrix overlap_T_table(const TDParameters& params, TMethod method) {
  require_valid(params);
  const auto basis = params.basis();
  const std::size_t d = basis->size();
  std::vector<FieldElement> cells(d * d);
  internal::parallel_for(d * d, [&](std::size_t k) {
    cells[k] = overlap_T_unchecked(params, (*basis)[k / d], (*basis)[k % d], method);
  });
  ExactMatrix m(basis);
  for (std::size_t k = 0; k < d * d; ++k) m.set(k / d, k % d, cells[k]);
  return m;
}

ExactMatrix overlap_U_table(const TDParameters& params, UMethod method) {
  require_valid(params);
  if (method == UMethod::linear_solve) return U_solve_table(params);
  const auto basis = params.basis();
  const std::size_t d = basis->size();
  std::vector<FieldElement> cells(d * d);
  internal::parallel_for(d * d, [&](std::size_t k) {
    cells[k] = overlap_U_unchecked(params, (*basis)[k / d], (*basis)[k % d], method);
  });
  ExactMatrix m(basis);
  for (std::size_t k = 0; k < d * d; ++k) m.set(k / d, k % d, cells[k]);
  return m;
}

FieldElement racah_T_univariate(const TDParameters& params, int i, int x) {
  require_valid(params);
  require_univariate(params, i, x);
  const int l = params.shape.at1(1);
  const FieldElement& a = params.a_at(1);
  const FieldElement b1 = params.omega_star - a;
  const FieldElement b2 = FieldElement(l + 1) + params.omega + a;
  const FieldElement num[] = {FieldElement(-i), FieldElement(-x), FieldElement(i) + params.omega_star,
                              FieldElement(x) + params.omega};
  const FieldElement den[] = {b1, b2, FieldElement(-l)};
  return sign_power(i) * inv_pochhammer(FieldElement(i) + params.omega_star, i, "Racah T") *
         inv_pochhammer(FieldElement(x) + params.omega, x, "Racah T") * binom(l, i) * pochhammer(b1, i) *
         pochhammer(b2, x) * pfq_terminating(num, den, FieldElement(1), l);
}

FieldElement racah_U_before_whipple(const TDParameters& params, int i, int x) {
  require_valid(params);
  require_univariate(params, i, x);
  const int l = params.shape.at1(1);
  const FieldElement& a = params.a_at(1);
  const FieldElement& w = params.omega;
  const FieldElement& ws = params.omega_star;
  const FieldElement lead =
      sign_power(l) * pochhammer(FieldElement(-l), x) * pochhammer(FieldElement(x + l + 1) + a + w, l - x) *
      pochhammer(FieldElement(i) - a + ws, l - i) * inv_pochhammer(FieldElement(1), x, "U before Whipple") *
      inv_pochhammer(FieldElement(2 * x + 1) + w, l - x, "U before Whipple") *
      inv_pochhammer(FieldElement(2 * i + 1) + ws, l - i, "U before Whipple");
  const FieldElement num[] = {FieldElement(i - l), FieldElement(x - l), FieldElement(-x - l) - w,
                              FieldElement(-i - l) - ws};
  const FieldElement den[] = {FieldElement(-l), FieldElement(-2 * l) - a - w, FieldElement(1 - l) + a - ws};
  return lead * pfq_terminating(num, den, FieldElement(1), l);
}

FieldElement racah_U_after_whipple(const TDParameters& params, int i, int x) {
  require_valid(params);
  require_univariate(params, i, x);
  const int l = params.shape.at1(1);
  const FieldElement& a = params.a_at(1);
  const FieldElement& w = params.omega;
  const FieldElement& ws = params.omega_star;
  const char* where = "U after Whipple";
  const FieldElement i_part =
      pochhammer(FieldElement(i) - a + ws, l - i) * pochhammer(FieldElement(i - l) - a - w + ws, l - i) *
      pochhammer(FieldElement(i + 1) + a, l - i) * inv_pochhammer(FieldElement(2 * i + 1) + ws, l - i, where) *
      inv_pochhammer(FieldElement(-2 * l) - a - w, l - i, where) *
      inv_pochhammer(FieldElement(1 - l) + a - ws, l - i, where);
  const FieldElement x_part =
      pochhammer(FieldElement(x + l + 1) + a + w, l - x) * pochhammer(FieldElement(1 - x) + a - ws, x) *
      pochhammer(FieldElement(-x - l) - a - w, x) * inv_pochhammer(FieldElement(2 * x + 1) + w, l - x, where) *
      inv_pochhammer(FieldElement(1) + a + w - ws, x, where) * inv_pochhammer(FieldElement(-l) - a, x, where);
  const FieldElement norm = sign_power(l) * pochhammer(FieldElement(-l), x) * inv_pochhammer(FieldElement(1), x, where) *
                            i_part * x_part;
  const FieldElement num[] = {FieldElement(-i), FieldElement(i) + ws, FieldElement(-x), FieldElement(x) + w};
  const FieldElement den[] = {FieldElement(-l), ws - a, FieldElement(l + 1) + a + w};
  return norm * pfq_terminating(num, den, FieldElement(1), l);
}

FieldElement overlap_limit_kind_unchecked(const TDParameters& params, LimitKind kind, const MultiIndex& i,
                                          const MultiIndex& x) {
  check_indices(params, i, x);
  return kind == LimitKind::hahn ? hahn_formula(params, i, x) : krawtchouk_formula(params, i, x);
}

FieldElement overlap_limit_kind(const TDParameters& params, LimitKind kind, const MultiIndex& i,
                                const MultiIndex& x) {
  require_valid(params);
  return overlap_limit_kind_unchecked(params, kind, i, x);
}

TDParameters limit_substitution(const TDParameters& params, LimitKind kind) {
  const FieldElement t = FieldElement::variable();
  TDParameters out = params;
  if (kind == LimitKind::hahn) {
    out.h_star = params.h_star * t;
    out.omega_star = t.inverse();
  } else {
    out.h = params.h * t;
    out.omega = t.inverse();
  }
  return out;
}

Rational limit_of_overlap(const TDParameters& params, LimitKind kind, const MultiIndex& i, const MultiIndex& x) {
  require_valid(params);
  const TDParameters sub = limit_substitution(params, kind);
  const FieldElement f = kind == LimitKind::hahn ? overlap_T_unchecked(sub, i, x, TMethod::direct_sum)
                                                  : overlap_limit_kind_unchecked(sub, LimitKind::hahn, i, x);
  return limit_at_zero(f);
}

}  // namespace tdpair
