#include "tdpair/multiindex.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "tdpair/errors.hpp"

namespace tdpair {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  std::string_view body = cleaned;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = body.find(',', start);
    const std::string_view tok = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("malformed integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(v[k]);
  }
  return s + "]";
}

}  // namespace

MultiIndex MultiIndex::unit(std::size_t n, std::size_t p) {
  if (p < 1 || p > n) throw IndexOutOfRange("unit tuple e_" + std::to_string(p) + " with N=" + std::to_string(n));
  MultiIndex e(n);
  e.v_[p - 1] = 1;
  return e;
}

MultiIndex MultiIndex::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos || text[first] != '[') {
    throw ParseError("multi-index must be bracketed, e.g. [2,0,3]: '" + std::string(text) + "'");
  }
  return MultiIndex(parse_int_list(text));
}

int MultiIndex::total() const { return std::accumulate(v_.begin(), v_.end(), 0); }

int MultiIndex::partial_sum(int j, int k) const {
  if (j < 1 || k > static_cast<int>(v_.size())) {
    throw IndexOutOfRange("partial sum bounds (" + std::to_string(j) + "," + std::to_string(k) + ") for N=" +
                          std::to_string(v_.size()));
  }
  int s = 0;
  for (int p = j; p <= k; ++p) s += v_[static_cast<std::size_t>(p - 1)];
  return s;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& o) {
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& o) {
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
  return *this;
}

bool MultiIndex::pointwise_le(const MultiIndex& o) const {
  for (std::size_t k = 0; k < v_.size(); ++k) {
    if (v_[k] > o.v_[k]) return false;
  }
  return true;
}

std::string MultiIndex::to_string() const { return join_list(v_); }

MultiIndex pointwise_min(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::min(a[k], b[k]);
  return r;
}

MultiIndex pointwise_max(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

int partial_sum(const MultiIndex& n, int j, int k) { return n.partial_sum(j, k); }

Shape::Shape(std::vector<int> ell) : ell_(std::move(ell)) {
  if (ell_.empty()) throw InvalidShape("shape needs at least one entry");
  for (int l : ell_) {
    if (l < 1) throw InvalidShape("shape entries must be >= 1, got " + std::to_string(l));
  }
}

Shape Shape::parse(std::string_view text) { return Shape(parse_int_list(text)); }

int Shape::diameter() const { return std::accumulate(ell_.begin(), ell_.end(), 0); }

std::size_t Shape::dimension() const {
  std::size_t d = 1;
  for (int l : ell_) d *= static_cast<std::size_t>(l + 1);
  return d;
}

int Shape::partial_sum(int j, int k) const {
  if (j < 1 || k > static_cast<int>(ell_.size())) throw IndexOutOfRange("shape partial sum out of range");
  int s = 0;
  for (int p = j; p <= k; ++p) s += ell_[static_cast<std::size_t>(p - 1)];
  return s;
}

bool Shape::contains(const MultiIndex& n) const {
  if (n.size() != ell_.size()) return false;
  for (std::size_t k = 0; k < ell_.size(); ++k) {
    if (n[k] < 0 || n[k] > ell_[k]) return false;
  }
  return true;
}

std::string Shape::to_string() const { return join_list(ell_); }

std::vector<MultiIndex> enumerate(const Shape& shape) {
  std::vector<MultiIndex> out;
  out.reserve(shape.dimension());
  MultiIndex cur(shape.size());
  // Odometer over the box, last coordinate fastest, gives lexicographic order.
  for (bool done = false; !done;) {
    out.push_back(cur);
    done = true;
    for (std::size_t k = shape.size(); k-- > 0;) {
      if (cur[k] < shape[k]) {
        ++cur[k];
        done = false;
        break;
      }
      cur[k] = 0;
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MultiIndex& a, const MultiIndex& b) { return a.total() < b.total(); });
  return out;
}

std::vector<std::int64_t> shape_profile(const Shape& shape) {
  std::vector<std::int64_t> poly{1};
  for (int l : shape.ell()) {
    // Multiply by 1 + lambda + ... + lambda^l.
    std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(l), 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (int j = 0; j <= l; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

Basis::Basis(Shape shape) : shape_(std::move(shape)), elements_(enumerate(shape_)) {
  for (std::size_t k = 0; k < elements_.size(); ++k) lookup_.emplace(elements_[k], k);
}

std::optional<std::size_t> Basis::position(const MultiIndex& n) const {
  auto it = lookup_.find(n);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

}  // namespace tdpair
