#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hermsos/multi_index.hpp"
#include "hermsos/scalar.hpp"

namespace hermsos {

/// Homogeneous holomorphic polynomial of degree d in n variables (an element
/// of V_d). Zero coefficients are never stored.
template <ScalarType S>
class HoloPoly {
 public:
  using Terms = std::map<MultiIndex, S>;

  HoloPoly(int n, int d);
  HoloPoly(int n, int d, const Terms& terms);

  static HoloPoly monomial(const MultiIndex& alpha, const S& c = S(1));

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coeff(const MultiIndex& alpha) const;
  /// Accumulates c into the coefficient of z^alpha.
  void add_term(const MultiIndex& alpha, const S& c);

  S evaluate(std::span<const S> z) const;
  Complex evaluate_complex(std::span<const Complex> z) const;

  HoloPoly& operator+=(const HoloPoly& other);
  HoloPoly scaled(const S& c) const;
  HoloPoly operator*(const HoloPoly& other) const;

  friend bool operator==(const HoloPoly& a, const HoloPoly& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  int d_;
  Terms terms_;
};

/// Bihomogeneous polynomial f(z, conj z) = sum E_{mu nu} z^mu conj(z)^nu of
/// bidegree (m, m). Zero coefficients are never stored.
template <ScalarType S>
class BihomPoly {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;
  using Terms = std::map<Key, S>;

  BihomPoly(int n, int m);
  BihomPoly(int n, int m, const Terms& terms);

  static BihomPoly constant(int n, const S& c);

  int num_vars() const { return n_; }
  int bidegree() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coeff(const MultiIndex& mu, const MultiIndex& nu) const;
  void add_term(const MultiIndex& mu, const MultiIndex& nu, const S& c);

  /// Exact tower: coefficientwise E_{mu nu} == conj(E_{nu mu}).
  /// Float tower: agreement within rel_tol times the largest coefficient.
  bool is_hermitian(double rel_tol = 1e-12) const;

  /// Full (complex) value; its imaginary part vanishes for Hermitian f.
  S evaluate(std::span<const S> z) const;
  Complex evaluate_complex(std::span<const Complex> z) const;
  /// sum |E_{mu nu}| |z^mu| |z^nu|, a scale for rounding-error bounds.
  double evaluate_abs(std::span<const Complex> z) const;

  double max_abs_coeff() const;

  BihomPoly& operator+=(const BihomPoly& other);
  BihomPoly scaled(const S& c) const;

  friend bool operator==(const BihomPoly& a, const BihomPoly& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  int m_;
  Terms terms_;
};

/// Real value of f at z. Throws DimensionMismatch when z has the wrong length.
template <ScalarType S>
RealOf<S> eval(const BihomPoly<S>& f, std::span<const S> z);

template <ScalarType S>
BihomPoly<S> mul(const BihomPoly<S>& f, const BihomPoly<S>& g);

/// ||z||^{2d} = sum_{|alpha|=d} (d!/alpha!) |z^alpha|^2.
template <ScalarType S>
BihomPoly<S> norm_power(int n, int d);

/// sum_k A_k conj(A_k) for components of one common degree.
template <ScalarType S>
BihomPoly<S> from_squared_norm(std::span<const HoloPoly<S>> components);

/// sum_k w_k A_k conj(A_k); used for root-free exact replays.
template <ScalarType S>
BihomPoly<S> weighted_squared_norm(std::span<const HoloPoly<S>> components,
                                   std::span<const RealOf<S>> weights);

/// p(Az) for an n x n row-major matrix A.
template <ScalarType S>
HoloPoly<S> substitute(const HoloPoly<S>& p, std::span<const S> a);

/// f(Az) for an n x n row-major matrix A.
template <ScalarType S>
BihomPoly<S> substitute(const BihomPoly<S>& f, std::span<const S> a);

HoloPoly<Complex> to_float(const HoloPoly<GaussRational>& p);
BihomPoly<Complex> to_float(const BihomPoly<GaussRational>& f);

}  // namespace hermsos
