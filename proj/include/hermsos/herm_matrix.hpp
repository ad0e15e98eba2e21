#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hermsos/poly.hpp"

namespace hermsos {

/// Square matrix indexed by the graded-lex monomial basis of V_d in n
/// variables. Hermitian symmetry is expected but checked only where a
/// consumer relies on it (see ldlt_psd).
template <ScalarType S>
class HermMatrix {
 public:
  /// Zero matrix on the basis of V_d.
  HermMatrix(int n, int d);
  HermMatrix(int n, int d, std::vector<S> entries);
  /// A bare size x size matrix, viewed as acting on V_1 in `size` variables.
  static HermMatrix square(std::size_t size, std::vector<S> entries);

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return size_; }

  const S& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  void set(std::size_t i, std::size_t j, S value) { entries_[i * size_ + j] = std::move(value); }
  const std::vector<S>& entries() const { return entries_; }

  bool is_hermitian(double rel_tol = 1e-12) const;
  double max_abs() const;

  /// P M P* with (P M P*)_{ij} = M_{perm[i], perm[j]}.
  HermMatrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const HermMatrix& a, const HermMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  int d_;
  std::size_t size_;
  std::vector<S> entries_;
};

/// entries(i, j) = E_{mu_i nu_j} in the graded-lex basis of V_m.
template <ScalarType S>
HermMatrix<S> to_matrix(const BihomPoly<S>& f);

template <ScalarType S>
BihomPoly<S> from_matrix(const HermMatrix<S>& m);

/// v* M v (real part; the imaginary part vanishes for Hermitian M).
template <ScalarType S>
RealOf<S> quadratic_form(const HermMatrix<S>& m, std::span<const S> v);

}  // namespace hermsos
