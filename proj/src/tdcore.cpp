#include "tdpair/tdcore.hpp"

#include <algorithm>
#include <map>

#include "tdpair/errors.hpp"

namespace tdpair {

namespace {

void check_index(const TDParameters& params, const MultiIndex& n, std::size_t p) {
  if (p < 1 || p > params.N()) throw IndexOutOfRange("component p=" + std::to_string(p) + " out of 1..N");
  if (!params.shape.contains(n)) throw IndexOutOfRange("tuple " + n.to_string() + " outside the shape box");
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

CheckResult clause(const std::string& name, const std::string& ref, const std::vector<std::string>& violations) {
  CheckResult c;
  c.check = name;
  c.paper_ref = ref;
  if (!violations.empty()) {
    c.status = CheckStatus::Fail;
    c.witness = Witness{join(violations), std::nullopt, std::nullopt, {}, {}};
  }
  return c;
}

std::string range_text(long lo, long hi) { return "{" + std::to_string(lo) + ",...," + std::to_string(hi) + "}"; }

}  // namespace

FieldElement eigenvalue(const TDParameters& params, int i, bool starred) {
  if (i < 0 || i > params.diameter()) {
    throw IndexOutOfRange("eigenvalue index " + std::to_string(i) + " outside 0.." + std::to_string(params.diameter()));
  }
  const FieldElement iv(i);
  if (starred) return params.theta0_star + params.h_star * iv * (iv + params.omega_star);
  return params.theta0 + params.h * iv * (iv + params.omega);
}

FieldElement xi(const TDParameters& params, const MultiIndex& n, std::size_t p, bool starred) {
  check_index(params, n, p);
  const int pi = static_cast<int>(p);
  const int N = static_cast<int>(params.N());
  const int np = n.at1(p);
  if (starred) {
    const int lp = params.shape.at1(p);
    if (np == lp) return FieldElement(0);
    const int base = n.partial_sum(1, pi - 1) + n.partial_sum(1, pi) + params.shape.partial_sum(pi + 1, N);
    return params.h_star * (FieldElement(base) - params.a_at(p) + params.omega_star) * FieldElement(np - lp);
  }
  if (np == 0) return FieldElement(0);
  const int base = n.partial_sum(1, pi - 1) + n.partial_sum(1, pi) + params.shape.partial_sum(pi, N);
  return params.h * (FieldElement(base) + params.a_at(p) + params.omega) * FieldElement(np);
}

std::vector<FieldElement> StringSet::elements(const TDParameters& params) const {
  const FieldElement shift = (params.omega - params.omega_star) / FieldElement(2);
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int k = 1; k <= length; ++k) {
    FieldElement v = anchor + FieldElement(k) + shift;
    out.push_back(sign > 0 ? v : -v);
  }
  return out;
}

bool strings_general_position(const StringSet& s1, const StringSet& s2, const TDParameters& params) {
  const auto e1 = s1.elements(params);
  const auto e2 = s2.elements(params);
  auto contains_all = [](const std::vector<FieldElement>& big, const std::vector<FieldElement>& small) {
    return std::all_of(small.begin(), small.end(),
                       [&](const FieldElement& v) { return std::find(big.begin(), big.end(), v) != big.end(); });
  };
  if (contains_all(e1, e2) || contains_all(e2, e1)) return true;

  std::vector<FieldElement> uni = e1;
  for (const auto& v : e2) {
    if (std::find(uni.begin(), uni.end(), v) == uni.end()) uni.push_back(v);
  }
  std::vector<Rational> offsets;
  offsets.reserve(uni.size());
  for (const auto& v : uni) {
    FieldElement d = v - uni.front();
    if (!d.is_integer()) return true;
    offsets.push_back(d.rational());
  }
  std::sort(offsets.begin(), offsets.end());
  for (std::size_t k = 1; k < offsets.size(); ++k) {
    if (!(offsets[k] - offsets[k - 1]).is_one()) return true;
  }
  return false;
}

VerificationReport validate_parameters(const TDParameters& params) {
  VerificationReport report;
  const long d = params.diameter();
  const std::size_t N = params.N();

  std::vector<std::string> v1;
  if (params.a.size() != N) {
    v1.push_back("expected " + std::to_string(N) + " entries in a, got " + std::to_string(params.a.size()));
    report.checks.push_back(clause("cond1", "well-formed parameter set", v1));
    return report;
  }
  if (params.h.is_zero()) v1.push_back("h = 0");
  if (params.h_star.is_zero()) v1.push_back("h* = 0");
  if (params.omega.is_integer_in(-2 * d + 1, -1)) {
    v1.push_back("omega = " + params.omega.to_string() + " in " + range_text(-2 * d + 1, -1));
  }
  if (params.omega_star.is_integer_in(-2 * d + 1, -1)) {
    v1.push_back("omega* = " + params.omega_star.to_string() + " in " + range_text(-2 * d + 1, -1));
  }
  report.checks.push_back(
      clause("cond1", "distinct eigenvalues: h, h* != 0 and omega, omega* outside {-2|l|+1,...,-1}", v1));

  std::vector<std::string> v2;
  for (std::size_t p = 1; p <= N; ++p) {
    const long lp = params.shape.at1(p);
    const FieldElement& ap = params.a_at(p);
    const std::pair<std::string, FieldElement> probes[] = {
        {"a_" + std::to_string(p), ap},
        {"a_" + std::to_string(p) + " + omega - omega*", ap + params.omega - params.omega_star},
        {"a_" + std::to_string(p) + " - |l| - omega*", ap - FieldElement(d) - params.omega_star},
        {"a_" + std::to_string(p) + " + |l| + omega", ap + FieldElement(d) + params.omega},
    };
    for (const auto& [label, value] : probes) {
      if (value.is_integer_in(-lp, -1)) v2.push_back(label + " = " + value.to_string() + " in " + range_text(-lp, -1));
    }
  }
  report.checks.push_back(clause("cond2", "nonvanishing split-basis off-diagonal coefficients", v2));

  std::vector<std::string> v3;
  for (std::size_t i = 1; i <= N; ++i) {
    for (std::size_t j = i; j <= N; ++j) {
      for (int ei : {1, -1}) {
        for (int ej : {1, -1}) {
          if (i == j && ej < ei) continue;
          const StringSet si{ei, params.shape.at1(i), params.a_at(i)};
          const StringSet sj{ej, params.shape.at1(j), params.a_at(j)};
          if (!strings_general_position(si, sj, params)) {
            v3.push_back(std::string("S") + (ei > 0 ? "+" : "-") + "(l_" + std::to_string(i) + ",a_" +
                         std::to_string(i) + ") and S" + (ej > 0 ? "+" : "-") + "(l_" + std::to_string(j) + ",a_" +
                         std::to_string(j) + ") not in general position");
          }
        }
      }
    }
  }
  report.checks.push_back(clause("cond3", "pairwise general position of the strings S+-(l_i, a_i)", v3));
  return report;
}

void require_valid(const TDParameters& params) {
  const VerificationReport r = validate_parameters(params);
  if (r.passed()) return;
  std::string msg = "invalid parameters:";
  for (const auto& c : r.checks) {
    if (!c.passed()) msg += " [" + c.check + ": " + c.witness->description + "]";
  }
  throw InvalidParameters(msg);
}

std::string to_string(Operator op) {
  switch (op) {
    case Operator::A:
      return "A";
    case Operator::Astar:
      return "Astar";
    case Operator::S:
      return "S";
    case Operator::R:
      return "R";
    case Operator::L:
      return "L";
  }
  return "?";
}

Operator parse_operator(const std::string& name) {
  if (name == "A") return Operator::A;
  if (name == "Astar" || name == "A*") return Operator::Astar;
  if (name == "S") return Operator::S;
  if (name == "R") return Operator::R;
  if (name == "L") return Operator::L;
  throw ParseError("unknown operator '" + name + "'");
}

ExactMatrix assemble_operator(const TDParameters& params, Operator which) {
  auto basis = params.basis();
  ExactMatrix m(basis);
  const std::size_t N = params.N();
  const MultiIndex ell = params.shape.as_index();
  for (std::size_t col = 0; col < basis->size(); ++col) {
    const MultiIndex& n = (*basis)[col];
    switch (which) {
      case Operator::S:
        m.set(*basis->position(ell - n), col, FieldElement(1));
        break;
      case Operator::A:
      case Operator::R:
        if (which == Operator::A) m.set(col, col, eigenvalue(params, n.total(), false));
        for (std::size_t p = 1; p <= N; ++p) {
          const MultiIndex up = n + MultiIndex::unit(N, p);
          if (auto row = basis->position(up)) m.set(*row, col, xi(params, up, p, false));
        }
        break;
      case Operator::Astar:
      case Operator::L:
        if (which == Operator::Astar) m.set(col, col, eigenvalue(params, n.total(), true));
        for (std::size_t p = 1; p <= N; ++p) {
          const MultiIndex down = n - MultiIndex::unit(N, p);
          if (auto row = basis->position(down)) m.set(*row, col, xi(params, down, p, true));
        }
        break;
    }
  }
  return m;
}

ExactMatrix build_operator(const TDParameters& params, Operator which) {
  require_valid(params);
  return assemble_operator(params, which);
}

TDParameters sas_substitution_for_A(const TDParameters& params) {
  TDParameters q = params;
  const FieldElement d(params.diameter());
  q.theta0_star = params.theta0 + params.h * d * (d + params.omega);
  q.h_star = params.h;
  q.omega_star = -params.omega - FieldElement(2) * d;
  return q;
}

TDParameters sas_substitution_for_Astar(const TDParameters& params) {
  TDParameters q = params;
  const FieldElement d(params.diameter());
  q.theta0 = params.theta0_star + params.h_star * d * (d + params.omega_star);
  q.h = params.h_star;
  q.omega = -params.omega_star - FieldElement(2) * d;
  return q;
}

FieldElement td_rho(const TDParameters& params, bool starred) {
  const FieldElement& h = starred ? params.h_star : params.h;
  const FieldElement& w = starred ? params.omega_star : params.omega;
  const FieldElement& t0 = starred ? params.theta0_star : params.theta0;
  return h * (h * (w * w - FieldElement(1)) - FieldElement(4) * t0);
}

ExactMatrix td_relation_residual(const ExactMatrix& a, const ExactMatrix& astar, const FieldElement& beta,
                                 const FieldElement& gamma, const FieldElement& rho) {
  const ExactMatrix aa = a * a;
  ExactMatrix inner = aa * astar;
  inner -= beta * (a * astar * a);
  inner += astar * aa;
  inner -= gamma * anticommutator(a, astar);
  inner -= rho * astar;
  return commutator(a, inner);
}

namespace {

/// Incremental row-echelon basis of flattened matrices.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t width) : width_(width) {}

  /// Reduces v against the basis; keeps it and returns true if independent.
  bool insert(std::vector<FieldElement> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].is_zero()) continue;
      const FieldElement f = v[pivot];
      for (std::size_t k = pivot; k < width_; ++k) {
        if (!row[k].is_zero()) v[k] -= f * row[k];
      }
    }
    std::size_t pivot = 0;
    while (pivot < width_ && v[pivot].is_zero()) ++pivot;
    if (pivot == width_) return false;
    const FieldElement inv = v[pivot].inverse();
    for (std::size_t k = pivot; k < width_; ++k) v[k] *= inv;
    // Keep existing rows reduced in the new pivot column so later reductions
    // stay single-pass.
    for (auto& [p, row] : rows_) {
      if (row[pivot].is_zero()) continue;
      const FieldElement f = row[pivot];
      for (std::size_t k = pivot; k < width_; ++k) {
        if (!v[k].is_zero()) row[k] -= f * v[k];
      }
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  std::size_t dimension() const { return rows_.size(); }

 private:
  std::size_t width_;
  std::map<std::size_t, std::vector<FieldElement>> rows_;
};

std::vector<FieldElement> flatten(const ExactMatrix& m) {
  const std::size_t n = m.size();
  std::vector<FieldElement> v(n * n);
  m.for_each([&](std::size_t r, std::size_t c, const FieldElement& x) { v[r * n + c] = x; });
  return v;
}

}  // namespace

IrreducibilityResult irreducibility_check(const ExactMatrix& a, const ExactMatrix& astar, int max_word_length) {
  const std::size_t n = a.size();
  IrreducibilityResult result;
  result.target_dimension = n * n;
  SpanBuilder span(n * n);
  std::vector<ExactMatrix> frontier{ExactMatrix::identity(a.basis_ptr())};
  span.insert(flatten(frontier.front()));
  for (int len = 1; len <= max_word_length && !frontier.empty(); ++len) {
    std::vector<ExactMatrix> next;
    for (const auto& w : frontier) {
      for (const ExactMatrix* g : {&a, &astar}) {
        ExactMatrix cand = *g * w;
        if (span.insert(flatten(cand))) next.push_back(std::move(cand));
        if (span.dimension() == result.target_dimension) {
          result.certified = true;
          result.span_dimension = span.dimension();
          result.word_length_reached = len;
          return result;
        }
      }
    }
    frontier = std::move(next);
    result.word_length_reached = len;
  }
  result.span_dimension = span.dimension();
  result.certified = result.span_dimension == result.target_dimension;
  return result;
}

}  // namespace tdpair
