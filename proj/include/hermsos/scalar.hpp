#pragma once

#include <complex>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hermsos {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Complex number a+bi with arbitrary-precision rational parts.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRational(int re) : re_(re) {}   // NOLINT(google-explicit-constructor)

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// |z|^2, exact.
  Rational norm2() const { return Rational(re_ * re_ + im_ * im_); }

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) {
    return {Rational(-a.re_), Rational(-a.im_)};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussRational conj(const GaussRational& z) { return {z.re(), Rational(-z.im())}; }

template <class S>
concept ScalarType = std::same_as<S, GaussRational> || std::same_as<S, Complex>;

/// Type relations for the two scalar towers.
template <ScalarType S>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussRational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
};

template <>
struct ScalarTraits<Complex> {
  using Real = double;
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
};

template <ScalarType S>
using RealOf = typename ScalarTraits<S>::Real;

inline bool is_exact_zero(const GaussRational& s) { return s.is_zero(); }
inline bool is_exact_zero(const Complex& s) { return s.real() == 0.0 && s.imag() == 0.0; }

inline const Rational& real_part(const GaussRational& s) { return s.re(); }
inline double real_part(const Complex& s) { return s.real(); }

inline Complex to_complex(const GaussRational& s) { return s.to_complex(); }
inline Complex to_complex(const Complex& s) { return s; }

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

/// Magnitude estimate used for tolerance scaling; exact tower uses |re|+|im|.
inline double magnitude(const GaussRational& s) {
  return std::abs(s.re().get_d()) + std::abs(s.im().get_d());
}
inline double magnitude(const Complex& s) { return std::abs(s); }

/// Lossless embedding of exact values into a tower (exact -> float is the
/// one explicit lossy conversion).
template <ScalarType S>
S scalar_from(const GaussRational& q) {
  if constexpr (std::same_as<S, GaussRational>) {
    return q;
  } else {
    return q.to_complex();
  }
}

template <ScalarType S>
S scalar_from_real(const RealOf<S>& r) {
  if constexpr (std::same_as<S, GaussRational>) {
    return GaussRational(r);
  } else {
    return Complex(r, 0.0);
  }
}

/// Parses "p/q", "p", or a decimal such as "-0.125" or "1e-3" into a
/// canonical rational. Throws InputError on malformed text.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" for integers.
std::string format_rational(const Rational& q);

/// Parses "a", "bi", "a+bi", "a-bi" where a and b are rational literals.
GaussRational parse_gauss(std::string_view text);
std::string format_gauss(const GaussRational& z);

/// 17 significant digits, enough for lossless double round trips.
std::string format_double(double x);

Rational factorial(unsigned k);
Rational binomial(unsigned n, unsigned k);

}  // namespace hermsos
