#pragma once

#include <stdexcept>
#include <string>

namespace tdpair {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidShape : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// A Pochhammer symbol in a denominator vanished while the matching numerator
/// did not. Under valid parameters this is unreachable for every closed formula
/// in the library, so seeing it signals a bug.
class ZeroDenominatorPochhammer : public Error {
 public:
  explicit ZeroDenominatorPochhammer(int k, const std::string& where = {})
      : Error("zero denominator Pochhammer at k=" + std::to_string(k) +
              (where.empty() ? std::string{} : " in " + where)),
        index_(k) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class PoleAtZero : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Raised when two routes that must agree structurally do not.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace tdpair
