#include "hermsos/herm_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hermsos/errors.hpp"

namespace hermsos {

using std::conj;

template <ScalarType S>
HermMatrix<S>::HermMatrix(int n, int d) : n_(n), d_(d), size_(basis_size(n, d)), entries_(size_ * size_, S(0)) {}

template <ScalarType S>
HermMatrix<S>::HermMatrix(int n, int d, std::vector<S> entries)
    : n_(n), d_(d), size_(basis_size(n, d)), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_)
    throw DimensionMismatch("matrix needs " + std::to_string(size_ * size_) + " entries, got " +
                            std::to_string(entries_.size()));
}

template <ScalarType S>
HermMatrix<S> HermMatrix<S>::square(std::size_t size, std::vector<S> entries) {
  return HermMatrix(static_cast<int>(size), 1, std::move(entries));
}

template <ScalarType S>
bool HermMatrix<S>::is_hermitian(double rel_tol) const {
  const double tol = ScalarTraits<S>::exact ? 0.0 : rel_tol * max_abs();
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i; j < size_; ++j) {
      if constexpr (ScalarTraits<S>::exact) {
        if (!((*this)(i, j) == conj((*this)(j, i)))) return false;
      } else {
        if (std::abs((*this)(i, j) - conj((*this)(j, i))) > tol) return false;
      }
    }
  return true;
}

template <ScalarType S>
double HermMatrix<S>::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, magnitude(e));
  return m;
}

template <ScalarType S>
HermMatrix<S> HermMatrix<S>::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != size_) throw DimensionMismatch("permutation length mismatch");
  std::vector<S> out(size_ * size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) out[i * size_ + j] = (*this)(perm[i], perm[j]);
  return HermMatrix(n_, d_, std::move(out));
}

template <ScalarType S>
HermMatrix<S> to_matrix(const BihomPoly<S>& f) {
  MonomialBasis basis(f.num_vars(), f.bidegree());
  HermMatrix<S> m(f.num_vars(), f.bidegree());
  for (const auto& [key, c] : f.terms()) m.set(basis.index_of(key.first), basis.index_of(key.second), c);
  return m;
}

template <ScalarType S>
BihomPoly<S> from_matrix(const HermMatrix<S>& m) {
  MonomialBasis basis(m.num_vars(), m.degree());
  BihomPoly<S> f(m.num_vars(), m.degree());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) f.add_term(basis[i], basis[j], m(i, j));
  return f;
}

template <ScalarType S>
RealOf<S> quadratic_form(const HermMatrix<S>& m, std::span<const S> v) {
  if (v.size() != m.size()) throw DimensionMismatch("quadratic form: vector length mismatch");
  S acc(0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (is_exact_zero(v[j])) continue;
    S col(0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (!is_exact_zero(v[i])) col += conj(v[i]) * m(i, j);
    acc += col * v[j];
  }
  return real_part(acc);
}

template class HermMatrix<GaussRational>;
template class HermMatrix<Complex>;
template HermMatrix<GaussRational> to_matrix(const BihomPoly<GaussRational>&);
template HermMatrix<Complex> to_matrix(const BihomPoly<Complex>&);
template BihomPoly<GaussRational> from_matrix(const HermMatrix<GaussRational>&);
template BihomPoly<Complex> from_matrix(const HermMatrix<Complex>&);
template Rational quadratic_form(const HermMatrix<GaussRational>&, std::span<const GaussRational>);
template double quadratic_form(const HermMatrix<Complex>&, std::span<const Complex>);

}  // namespace hermsos
