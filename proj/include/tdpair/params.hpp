#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tdpair/field.hpp"
#include "tdpair/multiindex.hpp"

namespace tdpair {

/// Full parameter set of one split-basis pair: shape l, the two spectra
/// (theta0, h, omega) and (theta0*, h*, omega*), and the free a_1..a_N.
struct TDParameters {
  Shape shape;
  FieldElement theta0;
  FieldElement theta0_star;
  FieldElement h;
  FieldElement h_star;
  FieldElement omega;
  FieldElement omega_star;
  std::vector<FieldElement> a;

  std::size_t N() const { return shape.size(); }
  int diameter() const { return shape.diameter(); }
  /// a_p with p counted from 1.
  const FieldElement& a_at(std::size_t p) const { return a.at(p - 1); }
  std::shared_ptr<const Basis> basis() const;

  /// Parses the JSON document {"ell":[...], "theta0":"p/q", ..., "a":[...]}.
  static TDParameters from_json(const std::string& text);
  /// Serializes with the same schema; rational-function values are rejected.
  std::string to_json() const;
};

}  // namespace tdpair
