#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdpair/multiindex.hpp"

namespace tdpair {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

/// Where an identity broke: the matrix entry (or scalar pair) that differed.
struct Witness {
  std::string description;
  std::optional<MultiIndex> row;
  std::optional<MultiIndex> col;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string check;
  std::string paper_ref;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Witness> witness;
  std::string note;
  double millis = 0.0;

  bool passed() const { return status != CheckStatus::Fail; }
};

/// Ordered list of check outcomes plus the inputs needed to reproduce them.
struct VerificationReport {
  std::vector<CheckResult> checks;
  std::string params_json;

  /// A suite passes iff no check failed; skipped checks do not count.
  bool passed() const;
  const CheckResult* find(const std::string& name) const;

  /// With include_timing off, millis are omitted so output is byte-stable.
  std::string to_text(bool include_timing = true) const;
  std::string to_json(bool include_timing = true) const;
};

}  // namespace tdpair
