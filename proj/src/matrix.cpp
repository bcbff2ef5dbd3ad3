#include "tdpair/matrix.hpp"

#include "tdpair/errors.hpp"

namespace tdpair {

ExactMatrix::ExactMatrix(std::shared_ptr<const Basis> basis) : basis_(std::move(basis)), rows_(basis_->size()) {}

ExactMatrix ExactMatrix::identity(std::shared_ptr<const Basis> basis) {
  ExactMatrix m(std::move(basis));
  for (std::size_t k = 0; k < m.size(); ++k) m.rows_[k].emplace(k, FieldElement(1));
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::shared_ptr<const Basis> basis, const std::vector<FieldElement>& values) {
  ExactMatrix m(std::move(basis));
  if (values.size() != m.size()) throw IndexOutOfRange("diagonal length mismatch");
  for (std::size_t k = 0; k < m.size(); ++k) m.set(k, k, values[k]);
  return m;
}

FieldElement ExactMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? FieldElement(0) : it->second;
}

FieldElement ExactMatrix::at(const MultiIndex& r, const MultiIndex& c) const {
  const auto pr = basis_->position(r);
  const auto pc = basis_->position(c);
  if (!pr || !pc) throw IndexOutOfRange("matrix index " + r.to_string() + "," + c.to_string() + " outside box");
  return at(*pr, *pc);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
  if (c >= rows_.size()) throw IndexOutOfRange("column out of range");
  auto& row = rows_.at(r);
  if (v.is_zero()) {
    row.erase(c);
  } else {
    row.insert_or_assign(c, v);
  }
}

void ExactMatrix::add_to(std::size_t r, std::size_t c, const FieldElement& v) {
  if (v.is_zero()) return;
  if (c >= rows_.size()) throw IndexOutOfRange("column out of range");
  auto& row = rows_.at(r);
  auto [it, inserted] = row.try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

void ExactMatrix::add_if_inside(const MultiIndex& r, const MultiIndex& c, const FieldElement& v) {
  const auto pr = basis_->position(r);
  const auto pc = basis_->position(c);
  if (pr && pc) add_to(*pr, *pc, v);
}

std::size_t ExactMatrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void ExactMatrix::for_each(const std::function<void(std::size_t, std::size_t, const FieldElement&)>& f) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) f(r, c, v);
  }
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(basis_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
  }
  return t;
}

std::vector<FieldElement> ExactMatrix::column(std::size_t c) const {
  std::vector<FieldElement> out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) out[r] = at(r, c);
  return out;
}

std::vector<std::vector<FieldElement>> ExactMatrix::to_dense() const {
  std::vector<std::vector<FieldElement>> out(rows_.size(), std::vector<FieldElement>(rows_.size()));
  for_each([&](std::size_t r, std::size_t c, const FieldElement& v) { out[r][c] = v; });
  return out;
}

void ExactMatrix::check_compatible(const ExactMatrix& o) const {
  if (!(*basis_ == *o.basis_)) throw IndexOutOfRange("matrices over different bases");
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  check_compatible(o);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : o.rows_[r]) add_to(r, c, v);
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  check_compatible(o);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : o.rows_[r]) add_to(r, c, -v);
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const FieldElement& s) {
  if (s.is_zero()) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_) {
    for (auto& [c, v] : r) v *= s;
  }
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  a.check_compatible(b);
  ExactMatrix out(a.basis_);
  for (std::size_t r = 0; r < a.rows_.size(); ++r) {
    for (const auto& [k, av] : a.rows_[r]) {
      for (const auto& [c, bv] : b.rows_[k]) out.add_to(r, c, av * bv);
    }
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return *a.basis_ == *b.basis_ && a.rows_ == b.rows_;
}

std::optional<ExactMatrix::Difference> ExactMatrix::first_difference(const ExactMatrix& o) const {
  check_compatible(o);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r] == o.rows_[r]) continue;
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      FieldElement x = at(r, c);
      FieldElement y = o.at(r, c);
      if (!(x == y)) return Difference{r, c, x, y};
    }
  }
  return std::nullopt;
}

ExactMatrix commutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; }
ExactMatrix anticommutator(const ExactMatrix& x, const ExactMatrix& y) { return x * y + y * x; }

ExactMatrix solve(const ExactMatrix& m, const ExactMatrix& b) {
  m.check_compatible(b);
  const std::size_t n = m.size();
  auto a = m.to_dense();
  auto rhs = b.to_dense();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw InvalidParameters("singular matrix in exact solve");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const FieldElement inv = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= inv;
      rhs[col][j] *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const FieldElement f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
        if (!rhs[col][j].is_zero()) rhs[r][j] -= f * rhs[col][j];
      }
    }
  }
  ExactMatrix out(m.basis_ptr());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, rhs[r][c]);
  }
  return out;
}

}  // namespace tdpair
