#include "tdpair/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "tdpair/cob.hpp"
#include "tdpair/errors.hpp"
#include "tdpair/overlap.hpp"
#include "tdpair/tdcore.hpp"

namespace tdpair {

namespace {

struct CheckInfo {
  Check check;
  const char* name;
  const char* reference;
};

constexpr CheckInfo kChecks[] = {
    {Check::constraints, "constraints",
     "distinct eigenvalues, nonvanishing split-basis coefficients, strings in general position"},
    {Check::eigen, "eigen", "V(x) diagonalizes A and V_i diagonalizes A*"},
    {Check::inverse, "inverse", "closed-form inverse change of basis for both eigenbases"},
    {Check::td_relations, "td_relations", "tridiagonal relations with beta = 2, gamma = 2h, gamma* = 2h*"},
    {Check::r3l, "r3l", "[R,[R,[R,L]]] = -6hh*(4|n|+omega+omega*+4) R^2 on each V^n"},
    {Check::block_structure, "block_structure",
     "A* block tridiagonal on V(x) and A on V_i, explicit coefficients versus conjugation"},
    {Check::sas_conjugation, "sas_conjugation", "S A S and S A* S are the pair with exchanged parameters"},
    {Check::overlap_consistency, "overlap_consistency",
     "T and U by every route; V_i = sum_x T_i(x) V(x) and V(x) = sum_i U_i(x) V_i"},
    {Check::biorthogonality, "biorthogonality", "sum_x T_i(x) U_j(x) = delta_ij"},
    {Check::racah_reduction, "racah_reduction", "N = 1: T and U as univariate Racah 4F3 at 1"},
    {Check::limits, "limits", "t -> 0 limits to the Hahn and Krawtchouk kinds"},
    {Check::irreducibility, "irreducibility", "words in A, A* span the full matrix algebra"},
};

const CheckInfo& info(Check c) {
  for (const auto& k : kChecks) {
    if (k.check == c) return k;
  }
  throw Error("unknown check");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Outcome builder for one check: the first recorded mismatch wins.
class Outcome {
 public:
  bool failed() const { return witness_.has_value(); }

  void matrices(const std::string& what, const ExactMatrix& lhs, const ExactMatrix& rhs) {
    if (failed()) return;
    if (auto d = lhs.first_difference(rhs)) {
      const Basis& b = lhs.basis();
      witness_ = Witness{what, b[d->row], b[d->col], d->rhs.to_string(), d->lhs.to_string()};
    }
  }

  void scalars(const std::string& what, const MultiIndex& row, const MultiIndex& col, const FieldElement& expected,
               const FieldElement& actual) {
    if (failed() || expected == actual) return;
    witness_ = Witness{what, row, col, expected.to_string(), actual.to_string()};
  }

  void fail(const std::string& what) {
    if (!failed()) witness_ = Witness{what, std::nullopt, std::nullopt, "", ""};
  }

  std::optional<Witness> take() { return std::move(witness_); }

 private:
  std::optional<Witness> witness_;
};

ExactMatrix spectrum(const TDParameters& P, bool starred) {
  std::vector<FieldElement> d;
  for (const auto& n : *P.basis()) d.push_back(eigenvalue(P, n.total(), starred));
  return ExactMatrix::diagonal(P.basis(), d);
}

void check_eigen(const TDParameters& P, Outcome& out) {
  const ExactMatrix C = cob_matrix(P, CobKind::C);
  const ExactMatrix D = cob_matrix(P, CobKind::D);
  out.matrices("A C = C diag(theta)", build_operator(P, Operator::A) * C, C * spectrum(P, false));
  out.matrices("A* D = D diag(theta*)", build_operator(P, Operator::Astar) * D, D * spectrum(P, true));
}

void check_inverse(const TDParameters& P, Outcome& out) {
  const ExactMatrix I = ExactMatrix::identity(P.basis());
  out.matrices("C Cbar = I", cob_matrix(P, CobKind::C) * cob_matrix(P, CobKind::Cbar), I);
  out.matrices("D Dbar = I", cob_matrix(P, CobKind::D) * cob_matrix(P, CobKind::Dbar), I);
}

void check_td(const TDParameters& P, const SuiteOptions& opt, Outcome& out) {
  const FieldElement beta = opt.beta_override.value_or(FieldElement(2));
  const ExactMatrix A = build_operator(P, Operator::A);
  const ExactMatrix As = build_operator(P, Operator::Astar);
  const ExactMatrix zero(P.basis());
  out.matrices("first tridiagonal relation (beta = " + beta.to_string() + ")",
               td_relation_residual(A, As, beta, FieldElement(2) * P.h, td_rho(P, false)), zero);
  out.matrices("second tridiagonal relation (beta = " + beta.to_string() + ")",
               td_relation_residual(As, A, beta, FieldElement(2) * P.h_star, td_rho(P, true)), zero);
}

void check_r3l(const TDParameters& P, Outcome& out) {
  const ExactMatrix R = build_operator(P, Operator::R);
  const ExactMatrix L = build_operator(P, Operator::L);
  std::vector<FieldElement> scale;
  for (const auto& n : *P.basis()) {
    scale.push_back(FieldElement(-6) * P.h * P.h_star * (FieldElement(4 * n.total() + 4) + P.omega + P.omega_star));
  }
  out.matrices("[R,[R,[R,L]]] V^n against the scaled R^2 V^n", commutator(R, commutator(R, commutator(R, L))),
               R * R * ExactMatrix::diagonal(P.basis(), scale));
}

void check_block(const TDParameters& P, Outcome& out) {
  const Basis& b = *P.basis();
  for (BlockForm which : {BlockForm::Astar_in_Vx, BlockForm::A_in_Vi}) {
    const char* label = which == BlockForm::Astar_in_Vx ? "A* in V(x)" : "A in V_i";
    const ExactMatrix conj = block_tridiagonal_conjugated(P, which);
    conj.for_each([&](std::size_t r, std::size_t c, const FieldElement& v) {
      if (std::abs(b[r].total() - b[c].total()) >= 2) {
        out.scalars(std::string(label) + ": entry between levels two or more apart", b[r], b[c], FieldElement(0), v);
      }
    });
    out.matrices(std::string(label) + ": explicit block coefficients against conjugation",
                 block_tridiagonal_explicit(P, which), conj);
  }
}

void check_sas(const TDParameters& P, Outcome& out) {
  const ExactMatrix S = build_operator(P, Operator::S);
  out.matrices("S A S = A* with exchanged parameters", S * build_operator(P, Operator::A) * S,
               assemble_operator(sas_substitution_for_A(P), Operator::Astar));
  out.matrices("S A* S = A with exchanged parameters", S * build_operator(P, Operator::Astar) * S,
               assemble_operator(sas_substitution_for_Astar(P), Operator::A));
}

void check_overlap(const TDParameters& P, Outcome& out) {
  const ExactMatrix T = overlap_T_table(P, TMethod::direct_sum);
  out.matrices("T matrix_product against direct_sum", overlap_T_table(P, TMethod::matrix_product), T);
  out.matrices("T shift_operator against direct_sum", overlap_T_table(P, TMethod::shift_operator), T);
  const ExactMatrix U = overlap_U_table(P, UMethod::linear_solve);
  out.matrices("U direct_sum against linear_solve", overlap_U_table(P, UMethod::direct_sum), U);
  out.matrices("U shift_operator against linear_solve", overlap_U_table(P, UMethod::shift_operator), U);
  const ExactMatrix C = cob_matrix(P, CobKind::C);
  const ExactMatrix D = cob_matrix(P, CobKind::D);
  out.matrices("V_i = sum_x T_i(x) V(x)", C * T.transpose(), D);
  out.matrices("V(x) = sum_i U_i(x) V_i", D * U, C);
}

void check_biortho(const TDParameters& P, Outcome& out) {
  out.matrices("sum_x T_i(x) U_j(x) = delta_ij",
               overlap_T_table(P, TMethod::direct_sum) * overlap_U_table(P, UMethod::direct_sum).transpose(),
               ExactMatrix::identity(P.basis()));
}

void check_racah(const TDParameters& P, Outcome& out) {
  const int l = P.shape.at1(1);
  for (int i = 0; i <= l; ++i) {
    for (int x = 0; x <= l; ++x) {
      const MultiIndex I{i}, X{x};
      out.scalars("T against the univariate Racah form", I, X, overlap_T(P, I, X, TMethod::direct_sum),
                  racah_T_univariate(P, i, x));
      const FieldElement before = racah_U_before_whipple(P, i, x);
      out.scalars("U against the 4F3 before Whipple", I, X, overlap_U(P, I, X, UMethod::direct_sum), before);
      out.scalars("U before against after Whipple", I, X, before, racah_U_after_whipple(P, i, x));
    }
  }
}

void check_limits(const TDParameters& P, Outcome& out) {
  for (const auto& i : *P.basis()) {
    for (const auto& x : *P.basis()) {
      out.scalars("t -> 0 limit of T against the Hahn formula", i, x, overlap_limit_kind(P, LimitKind::hahn, i, x),
                  FieldElement(limit_of_overlap(P, LimitKind::hahn, i, x)));
      out.scalars("t -> 0 limit of the Hahn formula against the Krawtchouk product", i, x,
                  overlap_limit_kind(P, LimitKind::krawtchouk, i, x),
                  FieldElement(limit_of_overlap(P, LimitKind::krawtchouk, i, x)));
    }
  }
}

}  // namespace

std::string to_string(Check c) { return info(c).name; }

Check parse_check(const std::string& name) {
  for (const auto& k : kChecks) {
    if (name == k.name) return k.check;
  }
  throw ParseError("unknown check '" + name + "'");
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (const auto& k : kChecks) out.push_back(k.check);
  return out;
}

std::vector<Check> default_checks() {
  auto out = all_checks();
  out.pop_back();
  return out;
}

VerificationReport run_suite(const TDParameters& params, const std::vector<Check>& checks,
                             const SuiteOptions& options) {
  VerificationReport report;
  try {
    report.params_json = params.to_json();
  } catch (const Error&) {
    report.params_json.clear();
  }

  auto start = std::chrono::steady_clock::now();
  const VerificationReport clauses = validate_parameters(params);
  const bool valid = clauses.passed();
  {
    CheckResult r{"constraints", info(Check::constraints).reference, CheckStatus::Pass, std::nullopt, "", 0.0};
    for (const auto& c : clauses.checks) {
      if (!c.passed()) {
        r.status = CheckStatus::Fail;
        if (!r.witness) r.witness = c.witness;
        r.note += (r.note.empty() ? "violated: " : ", ") + c.check;
      }
    }
    r.millis = elapsed_ms(start);
    report.checks.push_back(std::move(r));
  }

  std::vector<Check> order;
  for (const auto& k : kChecks) {
    if (k.check != Check::constraints && std::find(checks.begin(), checks.end(), k.check) != checks.end()) {
      order.push_back(k.check);
    }
  }

  for (Check c : order) {
    CheckResult r{info(c).name, info(c).reference, CheckStatus::Pass, std::nullopt, "", 0.0};
    start = std::chrono::steady_clock::now();
    if (!valid) {
      r.status = CheckStatus::Skipped;
      r.note = "parameters violate the constraints";
      report.checks.push_back(std::move(r));
      continue;
    }
    Outcome out;
    try {
      switch (c) {
        case Check::eigen:
          check_eigen(params, out);
          break;
        case Check::inverse:
          check_inverse(params, out);
          break;
        case Check::td_relations:
          check_td(params, options, out);
          break;
        case Check::r3l:
          check_r3l(params, out);
          break;
        case Check::block_structure:
          check_block(params, out);
          break;
        case Check::sas_conjugation:
          check_sas(params, out);
          break;
        case Check::overlap_consistency:
          check_overlap(params, out);
          break;
        case Check::biorthogonality:
          check_biortho(params, out);
          break;
        case Check::racah_reduction:
          if (params.N() != 1) {
            r.status = CheckStatus::Skipped;
            r.note = "univariate forms need N = 1";
          } else {
            check_racah(params, out);
          }
          break;
        case Check::limits:
          check_limits(params, out);
          break;
        case Check::irreducibility: {
          const auto res = irreducibility_check(build_operator(params, Operator::A),
                                                build_operator(params, Operator::Astar),
                                                options.irreducibility_word_length);
          r.note = (res.certified ? "certified" : "inconclusive") + std::string(": span dimension ") +
                   std::to_string(res.span_dimension) + " of " + std::to_string(res.target_dimension) +
                   " at word length " + std::to_string(res.word_length_reached);
          if (!res.certified) r.status = CheckStatus::Skipped;
          break;
        }
        case Check::constraints:
          break;
      }
    } catch (const Error& e) {
      out.fail(std::string("evaluation error: ") + e.what());
    }
    if (out.failed()) {
      r.status = CheckStatus::Fail;
      r.witness = out.take();
    }
    r.millis = elapsed_ms(start);
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace tdpair
