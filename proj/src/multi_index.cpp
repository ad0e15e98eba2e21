#include "hermsos/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hermsos/errors.hpp"

namespace hermsos {

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw InputError("multi-index exponents must be non-negative");
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
  std::vector<int> e(n, 0);
  e[j] = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw DimensionMismatch("multi-index length mismatch");
  std::vector<int> e(exps_);
  for (std::size_t j = 0; j < e.size(); ++j) e[j] += other.exps_[j];
  return MultiIndex(std::move(e));
}

Rational MultiIndex::factorial() const {
  Rational r(1);
  for (int e : exps_) r *= hermsos::factorial(static_cast<unsigned>(e));
  return r;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (auto c = a.exps_.size() <=> b.exps_.size(); c != 0) return c;
  for (std::size_t j = 0; j < a.exps_.size(); ++j) {
    if (a.exps_[j] != b.exps_[j]) return b.exps_[j] <=> a.exps_[j];
  }
  return std::strong_ordering::equal;
}

namespace {

void fill(int n, int remaining, std::size_t j, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (j + 1 == static_cast<std::size_t>(n)) {
    cur[j] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[j] = e;
    fill(n, remaining - e, j + 1, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_basis(int n, int d) {
  if (n < 1) throw InputError("enumerate_basis: n must be positive");
  if (d < 0) throw InputError("enumerate_basis: d must be non-negative");
  std::vector<MultiIndex> out;
  out.reserve(basis_size(n, d));
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  fill(n, d, 0, cur, out);
  return out;
}

std::size_t basis_size(int n, int d) {
  return binomial(static_cast<unsigned>(d + n - 1), static_cast<unsigned>(n - 1)).get_num().get_ui();
}

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d), elems_(enumerate_basis(n, d)) {}

std::size_t MonomialBasis::index_of(const MultiIndex& alpha) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), alpha);
  if (it == elems_.end() || *it != alpha)
    throw DimensionMismatch("monomial of degree " + std::to_string(alpha.degree()) +
                            " not in basis of degree " + std::to_string(d_));
  return static_cast<std::size_t>(it - elems_.begin());
}

}  // namespace hermsos
