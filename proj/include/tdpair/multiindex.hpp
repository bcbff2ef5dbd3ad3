#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tdpair {

/// N-tuple of integers. Entries may go negative or past a shape bound during
/// arithmetic; Shape::contains decides whether the tuple names a basis vector.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : v_(n, 0) {}
  MultiIndex(std::initializer_list<int> entries) : v_(entries) {}
  explicit MultiIndex(std::vector<int> entries) : v_(std::move(entries)) {}

  /// Unit tuple e_p, with p counted from 1.
  static MultiIndex unit(std::size_t n, std::size_t p);

  /// Parses "[2,0,3]" (brackets optional, whitespace ignored).
  static MultiIndex parse(std::string_view text);

  std::size_t size() const { return v_.size(); }
  /// Zero-based element access.
  int operator[](std::size_t k) const { return v_[k]; }
  int& operator[](std::size_t k) { return v_[k]; }
  /// One-based access matching the n_p subscripts of the formulas.
  int at1(std::size_t p) const { return v_[p - 1]; }
  const std::vector<int>& entries() const { return v_; }

  int total() const;
  /// |n|_j^k = sum_{p=j}^{k} n_p with 1-based bounds; zero when j > k.
  int partial_sum(int j, int k) const;

  MultiIndex& operator+=(const MultiIndex& o);
  MultiIndex& operator-=(const MultiIndex& o);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  /// Pointwise a <= b.
  bool pointwise_le(const MultiIndex& o) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> v_;
};

MultiIndex pointwise_min(const MultiIndex& a, const MultiIndex& b);
MultiIndex pointwise_max(const MultiIndex& a, const MultiIndex& b);

/// Free-function form of MultiIndex::partial_sum.
int partial_sum(const MultiIndex& n, int j, int k);

/// Bounds (l_1, ..., l_N) of the index box, all l_p >= 1.
class Shape {
 public:
  explicit Shape(std::vector<int> ell);
  /// Parses "2,1" or "[2,1]".
  static Shape parse(std::string_view text);

  std::size_t size() const { return ell_.size(); }
  int operator[](std::size_t k) const { return ell_[k]; }
  int at1(std::size_t p) const { return ell_[p - 1]; }
  const std::vector<int>& ell() const { return ell_; }
  MultiIndex as_index() const { return MultiIndex(ell_); }

  int diameter() const;
  std::size_t dimension() const;
  /// |l|_j^k.
  int partial_sum(int j, int k) const;
  bool contains(const MultiIndex& n) const;

  std::string to_string() const;
  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> ell_;
};

/// Every tuple in the box, ordered by ascending |n| then lexicographically.
std::vector<MultiIndex> enumerate(const Shape& shape);

/// Coefficients rho_0..rho_d of prod_p (1 - lambda^{l_p+1}) / (1 - lambda).
std::vector<std::int64_t> shape_profile(const Shape& shape);

/// Enumerated basis with reverse lookup. Out-of-box tuples have no position,
/// which is how the V^n = 0 convention surfaces to matrix assembly.
class Basis {
 public:
  explicit Basis(Shape shape);

  const Shape& shape() const { return shape_; }
  std::size_t size() const { return elements_.size(); }
  const MultiIndex& operator[](std::size_t k) const { return elements_[k]; }
  const std::vector<MultiIndex>& elements() const { return elements_; }
  std::optional<std::size_t> position(const MultiIndex& n) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const Basis& a, const Basis& b) { return a.shape_ == b.shape_; }

 private:
  Shape shape_;
  std::vector<MultiIndex> elements_;
  std::map<MultiIndex, std::size_t> lookup_;
};

}  // namespace tdpair
