#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tdpair/field.hpp"
#include "tdpair/multiindex.hpp"

namespace tdpair {

/// Square sparse matrix over FieldElement whose rows and columns are both
/// indexed by an enumerated Basis. Absent entries are zero; stored entries are
/// never zero.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::shared_ptr<const Basis> basis);

  static ExactMatrix identity(std::shared_ptr<const Basis> basis);
  static ExactMatrix diagonal(std::shared_ptr<const Basis> basis, const std::vector<FieldElement>& values);

  const Basis& basis() const { return *basis_; }
  const std::shared_ptr<const Basis>& basis_ptr() const { return basis_; }
  std::size_t size() const { return rows_.size(); }

  FieldElement at(std::size_t r, std::size_t c) const;
  FieldElement at(const MultiIndex& r, const MultiIndex& c) const;
  void set(std::size_t r, std::size_t c, const FieldElement& v);
  void add_to(std::size_t r, std::size_t c, const FieldElement& v);
  /// Adds v at (r, c) when both tuples are inside the box; silently drops the
  /// contribution otherwise (the V^n = 0 convention).
  void add_if_inside(const MultiIndex& r, const MultiIndex& c, const FieldElement& v);

  const std::map<std::size_t, FieldElement>& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzero_count() const;
  bool is_zero() const { return nonzero_count() == 0; }

  /// Calls f(row, col, value) over stored entries in row-major order.
  void for_each(const std::function<void(std::size_t, std::size_t, const FieldElement&)>& f) const;

  ExactMatrix transpose() const;
  std::vector<FieldElement> column(std::size_t c) const;
  std::vector<std::vector<FieldElement>> to_dense() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const FieldElement& s);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const FieldElement& s) { return a *= s; }
  friend ExactMatrix operator*(const FieldElement& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix solve(const ExactMatrix& m, const ExactMatrix& b);

  struct Difference {
    std::size_t row;
    std::size_t col;
    FieldElement lhs;
    FieldElement rhs;
  };
  /// First entry (row-major) where the two matrices differ.
  std::optional<Difference> first_difference(const ExactMatrix& o) const;

 private:
  void check_compatible(const ExactMatrix& o) const;
  std::shared_ptr<const Basis> basis_;
  std::vector<std::map<std::size_t, FieldElement>> rows_;
};

/// Commutator XY - YX and anticommutator XY + YX.
ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y);
ExactMatrix anticommutator(const ExactMatrix& x, const ExactMatrix& y);

/// Solves M X = B exactly by Gauss-Jordan elimination; throws
/// InvalidParameters if M is singular.
ExactMatrix solve(const ExactMatrix& m, const ExactMatrix& b);

}  // namespace tdpair
