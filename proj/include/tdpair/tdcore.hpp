#pragma once

#include <string>
#include <vector>

#include "tdpair/matrix.hpp"
#include "tdpair/params.hpp"
#include "tdpair/report.hpp"

namespace tdpair {

/// theta_i = theta0 + h i (i + omega), or the starred spectrum.
FieldElement eigenvalue(const TDParameters& params, int i, bool starred);

/// Off-diagonal split-basis coefficients xi_{n,p} and xi*_{n,p}; p from 1.
FieldElement xi(const TDParameters& params, const MultiIndex& n, std::size_t p, bool starred);

/// S^{+-}(l, a) = { +-(a + k + (omega - omega*)/2) : k = 1..l }.
struct StringSet {
  int sign = 1;
  int length = 1;
  FieldElement anchor;

  std::vector<FieldElement> elements(const TDParameters& params) const;
};

/// True iff one string contains the other or their union is not a unit-step
/// run {c+1, ..., c+m}. Values whose difference is not an integer never sit
/// next to each other in a run.
bool strings_general_position(const StringSet& s1, const StringSet& s2, const TDParameters& params);

/// Clause-by-clause check of the parameter constraints. The report has one
/// record per clause ("cond1", "cond2", "cond3") with every violation listed
/// in the witness.
VerificationReport validate_parameters(const TDParameters& params);

/// Throws InvalidParameters (with the violated clauses) unless valid.
void require_valid(const TDParameters& params);

enum class Operator { A, Astar, S, R, L };

std::string to_string(Operator op);
Operator parse_operator(const std::string& name);

/// Split-basis matrix of the requested operator. Validates first.
ExactMatrix build_operator(const TDParameters& params, Operator which);

/// Same matrix without validation. Used for substituted parameter sets
/// (the S-conjugation targets) that need not satisfy every constraint.
ExactMatrix assemble_operator(const TDParameters& params, Operator which);

/// Parameter images under conjugation by S: S A S = A*|_{sub} with
/// theta0* -> theta0 + h|l|(|l|+omega), h* -> h, omega* -> -omega - 2|l|,
/// and the mirror substitution for S A* S.
TDParameters sas_substitution_for_A(const TDParameters& params);
TDParameters sas_substitution_for_Astar(const TDParameters& params);

/// Tridiagonal relation parameters; gamma = 2h, gamma* = 2h*.
FieldElement td_rho(const TDParameters& params, bool starred);

/// [A, A^2 A* - beta A A* A + A* A^2 - gamma {A,A*} - rho A*] (and the starred
/// counterpart). Zero for beta = 2 on every valid parameter set.
ExactMatrix td_relation_residual(const ExactMatrix& a, const ExactMatrix& astar, const FieldElement& beta,
                                 const FieldElement& gamma, const FieldElement& rho);

/// Outcome of the word-span irreducibility test over Q.
struct IrreducibilityResult {
  bool certified = false;
  std::size_t span_dimension = 0;
  std::size_t target_dimension = 0;
  int word_length_reached = 0;
};

/// Spans words in {A, A*} up to max_word_length; certified once the span
/// reaches the full matrix algebra (dimension d^2).
IrreducibilityResult irreducibility_check(const ExactMatrix& a, const ExactMatrix& astar, int max_word_length);

}  // namespace tdpair
