#pragma once

#include <string>

#include "tdpair/matrix.hpp"
#include "tdpair/params.hpp"

namespace tdpair {

/// The four change-of-basis families. C and Cbar connect the split basis
/// with the A-eigenbasis V(x); D and Dbar with the A*-eigenbasis V_i.
enum class CobKind { C, Cbar, D, Dbar };

std::string to_string(CobKind kind);
CobKind parse_cob_kind(const std::string& name);

/// Closed-form coefficient with subscripts in formula order:
///   C_{n,x}   (first = n, second = x), nonzero only for x <= n,
///   Cbar_{x,n} (first = x, second = n), nonzero only for n <= x,
///   D_{n,i}   (first = n, second = i), nonzero only for n <= i,
///   Dbar_{i,n} (first = i, second = n), nonzero only for i <= n.
/// Validates the parameters first.
FieldElement cob_coefficient(const TDParameters& params, CobKind kind, const MultiIndex& first,
                             const MultiIndex& second);

/// Same, without the validation pass. Callers own the precondition.
FieldElement cob_coefficient_unchecked(const TDParameters& params, CobKind kind, const MultiIndex& first,
                                       const MultiIndex& second);

/// Assembled matrix of one family, laid out so that C * Cbar = I and
/// D * Dbar = I: C[n][x], Cbar[x][n], D[n][i], Dbar[i][n].
ExactMatrix cob_matrix(const TDParameters& params, CobKind kind);
ExactMatrix cob_matrix_unchecked(const TDParameters& params, CobKind kind);

enum class Eigenbasis { A_basis, Astar_basis };

/// Columns are V(x) (resp. V_i) expanded over the split basis.
ExactMatrix eigenbasis_matrix(const TDParameters& params, Eigenbasis which);

enum class BlockForm { Astar_in_Vx, A_in_Vi };

/// Matrix of A* in the V(x) basis (or A in the V_i basis) read off from the
/// explicit block coefficients, entry M[y][x] being the coefficient of V(y).
ExactMatrix block_tridiagonal_explicit(const TDParameters& params, BlockForm which);

/// Same matrix through conjugation, Cbar A* C (resp. Dbar A D).
ExactMatrix block_tridiagonal_conjugated(const TDParameters& params, BlockForm which);

/// Computes both routes, insists they agree and that nothing couples
/// eigenspaces whose levels differ by two or more; throws
/// StructureViolation naming the offending entry otherwise.
ExactMatrix block_tridiagonal_form(const TDParameters& params, BlockForm which);

}  // namespace tdpair
