#pragma once

#include "tdpair/params.hpp"

namespace fixtures {

// N=1, l=(1), theta0=theta0*=0, h=h*=1, omega=omega*=0, a=1.
inline tdpair::TDParameters reference_instance() {
  using tdpair::FieldElement;
  return tdpair::TDParameters{tdpair::Shape({1}), FieldElement(0), FieldElement(0), FieldElement(1), FieldElement(1),
                              FieldElement(0), FieldElement(0), {FieldElement(1)}};
}

inline tdpair::FieldElement q(const char* s) { return tdpair::FieldElement::parse(s); }

}  // namespace fixtures
