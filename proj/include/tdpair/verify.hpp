#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdpair/params.hpp"
#include "tdpair/report.hpp"

namespace tdpair {

enum class Check {
  constraints,
  eigen,
  inverse,
  td_relations,
  r3l,
  block_structure,
  sas_conjugation,
  overlap_consistency,
  biorthogonality,
  racah_reduction,
  limits,
  irreducibility,
};

std::string to_string(Check c);
Check parse_check(const std::string& name);

/// Every check except irreducibility, in report order.
std::vector<Check> default_checks();
std::vector<Check> all_checks();

struct SuiteOptions {
  /// Replaces beta = 2 in the td_relations check (mutation testing).
  std::optional<FieldElement> beta_override;
  /// Longest word in {A, A*} tried by the irreducibility check.
  int irreducibility_word_length = 12;
};

/// Runs the requested checks. The constraint check always runs first; when
/// it fails every other requested check is reported SKIPPED. Failures never
/// throw: each lands in the report with the first mismatching entry.
VerificationReport run_suite(const TDParameters& params, const std::vector<Check>& checks,
                             const SuiteOptions& options = {});

/// Draws rational parameters with numerators in [-bound, bound] and
/// denominators in [1, bound], rejecting until validate_parameters passes.
/// The stream is a fixed mt19937_64 mapping, so a seed reproduces the same
/// set on every platform. Throws SamplingExhausted after
/// kSamplingRetryBudget rejected draws; bound must be at least 4.
TDParameters random_valid_parameters(const Shape& shape, std::uint64_t seed, int bound);

inline constexpr int kSamplingRetryBudget = 2000;

}  // namespace tdpair
