#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hermsos/scalar.hpp"

namespace hermsos {

/// Exponent vector alpha in N^n with cached degree |alpha|.
///
/// Ordering is graded lexicographic: lower degree first, then larger leading
/// exponents first, so degree 2 in two variables runs (2,0), (1,1), (0,2).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents) : MultiIndex(std::vector<int>(exponents)) {}

  static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex unit(std::size_t n, std::size_t j);

  std::size_t size() const { return exps_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t j) const { return exps_[j]; }
  std::span<const int> exponents() const { return exps_; }

  MultiIndex operator+(const MultiIndex& other) const;

  /// alpha! = prod_j alpha_j!
  Rational factorial() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// All alpha with |alpha| = d in n variables, in graded-lex order.
/// Length is binomial(d+n-1, n-1).
std::vector<MultiIndex> enumerate_basis(int n, int d);

/// binomial(d+n-1, n-1) as a machine integer.
std::size_t basis_size(int n, int d);

/// Ordered monomial basis of V_d with index lookup.
class MonomialBasis {
 public:
  MonomialBasis(int n, int d);

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return elems_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<MultiIndex>& elements() const { return elems_; }

  /// Position of alpha; throws DimensionMismatch if alpha is not in the basis.
  std::size_t index_of(const MultiIndex& alpha) const;

 private:
  int n_;
  int d_;
  std::vector<MultiIndex> elems_;
};

/// z^alpha for a point z (any scalar supporting multiplication).
template <class T>
T monomial_value(const MultiIndex& alpha, std::span<const T> z) {
  T acc(1);
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (int e = 0; e < alpha[j]; ++e) acc *= z[j];
  return acc;
}

}  // namespace hermsos
