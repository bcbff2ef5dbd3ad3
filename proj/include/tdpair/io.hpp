#pragma once

#include <string>

#include "tdpair/matrix.hpp"

namespace tdpair {

/// Dense CSV. The header row lists the column multi-indices after a corner
/// cell; each following row starts with its row multi-index. Multi-indices
/// are quoted because they contain commas; values are exact rationals.
std::string matrix_to_csv(const ExactMatrix& m, const std::string& corner = "row\\col");

/// {"name": ..., "rows": [[...], ...], "cols": [[...], ...],
///  "entries": [[r, c, "p/q"], ...]} with r, c positions into rows/cols and
/// only nonzero entries listed, in row-major order.
std::string matrix_to_json(const ExactMatrix& m, const std::string& name);

/// Plain aligned table for terminals.
std::string matrix_to_text(const ExactMatrix& m);

}  // namespace tdpair
