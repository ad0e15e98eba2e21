// Shared fixtures for the test binaries: seeded random objects and the
// independent oracles the library is checked against. The oracles never
// call the code under test.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hermsos/bergman.hpp"
#include "hermsos/json_io.hpp"
#include "hermsos/stabilize.hpp"

namespace hermsos::testing {

using Q = Rational;
using G = GaussRational;

inline Q q(const char* text) { return parse_rational(text); }

/// mpq_class(n, d) is not reduced, and GMP arithmetic requires reduced operands.
inline Q frac(long n, long d) {
  Q r(n, d);
  r.canonicalize();
  return r;
}

/// |z1|^4 - lambda |z1 z2|^2 + |z2|^4.
inline BihomPoly<G> f_lambda(const Q& lambda) {
  BihomPoly<G> f(2, 2);
  f.add_term({2, 0}, {2, 0}, G(1));
  f.add_term({1, 1}, {1, 1}, G(Q(-lambda)));
  f.add_term({0, 2}, {0, 2}, G(1));
  return f;
}

inline BihomPoly<G> squared_norm_poly(int n) { return norm_power<G>(n, 1); }

/// Coefficient-convolution oracle for the Euclidean search on f_lambda:
/// ||z||^{2d} f_lambda has coefficients C(d,k) - lambda C(d,k-1) + C(d,k-2)
/// on the diagonal monomials of degree d+2, and a diagonal matrix is PSD
/// exactly when those are nonnegative.
inline bool oracle_euclidean_psd(const Q& lambda, int d) {
  auto c = [d](int k) -> Q {
    if (k < 0 || k > d) return Q(0);
    Q r(1);
    for (int j = 1; j <= k; ++j) r = r * (d - k + j) / j;
    return r;
  };
  for (int k = 0; k <= d + 2; ++k)
    if (c(k) - lambda * c(k - 1) + c(k - 2) < 0) return false;
  return true;
}

inline int oracle_euclidean_d0(const Q& lambda, int cap = 200) {
  for (int d = 0; d <= cap; ++d)
    if (oracle_euclidean_psd(lambda, d)) return d;
  return -1;
}

inline Q fact(int k) {
  Q r(1);
  for (int j = 2; j <= k; ++j) r *= j;
  return r;
}

/// <z^a, z^a> / pi^2 on the egg |z1|^2 + |z2|^{2p} < 1, by integrating out
/// the first radius and expanding (1 - t^p)^{a+1} binomially:
/// (1/(a+1)) sum_k C(a+1,k) (-1)^k / (b+1+pk).
inline Q oracle_egg_moment(int a, int b, int p) {
  Q s(0);
  Q binom(1);
  for (int k = 0; k <= a + 1; ++k) {
    Q term = binom / Q(b + 1 + p * k);
    s += (k % 2 == 0) ? term : Q(-term);
    binom = binom * (a + 1 - k) / (k + 1);
  }
  return s / (a + 1);
}

/// Ball moment <z^alpha, z^alpha> divided by the ball volume pi^n/n!,
/// via the Dirichlet integral alpha! n! / (n + |alpha|)!.
inline Q oracle_ball_moment(const std::vector<int>& alpha) {
  int deg = 0;
  Q num(1);
  for (int a : alpha) {
    num *= fact(a);
    deg += a;
  }
  const int n = static_cast<int>(alpha.size());
  return num * fact(n) / fact(n + deg);
}

inline Q oracle_polydisc_moment(const std::vector<int>& alpha) {
  Q r(1);
  for (int a : alpha) r /= (a + 1);
  return r;
}

/// Oracle for a diagonal f on a Reinhardt domain: the product
/// ||Phi^d||^2 f = (sum_alpha |z^alpha|^2 / c_alpha) f is diagonal, so its
/// matrix is PSD iff every coefficient is nonnegative.
template <class Moment>
bool oracle_diagonal_product_psd(const BihomPoly<G>& f, int d, Moment moment) {
  const int n = f.num_vars();
  std::map<std::vector<int>, Q> prod;
  for (const auto& alpha : enumerate_basis(n, d)) {
    std::vector<int> a(alpha.exponents().begin(), alpha.exponents().end());
    const Q w = 1 / moment(a);
    for (const auto& [key, c] : f.terms()) {
      if (!(key.first == key.second)) return false;  // not diagonal: oracle does not apply
      std::vector<int> e = a;
      for (std::size_t j = 0; j < e.size(); ++j) e[j] += key.first[j];
      prod[e] += w * c.re();
    }
  }
  for (const auto& [e, c] : prod)
    if (c < 0) return false;
  return true;
}

template <class Moment>
int oracle_diagonal_d0(const BihomPoly<G>& f, Moment moment, int cap) {
  for (int d = 0; d <= cap; ++d)
    if (oracle_diagonal_product_psd(f, d, moment)) return d;
  return -1;
}

// ------------------------------------------------------------ randomness

inline Q random_rational(std::mt19937_64& rng, int span = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  return frac(num(rng), den(rng));
}

inline G random_gauss(std::mt19937_64& rng, int span = 5, int max_den = 4) {
  return {random_rational(rng, span, max_den), random_rational(rng, span, max_den)};
}

/// Random element of V_d with roughly half the coefficients nonzero.
inline HoloPoly<G> random_holo(std::mt19937_64& rng, int n, int d) {
  HoloPoly<G> p(n, d);
  std::bernoulli_distribution keep(0.6);
  for (const auto& a : enumerate_basis(n, d))
    if (keep(rng)) p.add_term(a, random_gauss(rng));
  if (p.is_zero()) p.add_term(enumerate_basis(n, d).front(), G(1));
  return p;
}

inline HoloPoly<Complex> random_holo_float(std::mt19937_64& rng, int n, int d) {
  HoloPoly<Complex> p(n, d);
  std::normal_distribution<double> g;
  for (const auto& a : enumerate_basis(n, d)) p.add_term(a, Complex(g(rng), g(rng)));
  return p;
}

/// Random Hermitian bihomogeneous polynomial of bidegree m.
inline BihomPoly<G> random_hermitian(std::mt19937_64& rng, int n, int m) {
  const auto basis = enumerate_basis(n, m);
  BihomPoly<G> f(n, m);
  std::bernoulli_distribution keep(0.5);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    f.add_term(basis[i], basis[i], G(random_rational(rng)));
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!keep(rng)) continue;
      const G c = random_gauss(rng);
      f.add_term(basis[i], basis[j], c);
      f.add_term(basis[j], basis[i], conj(c));
    }
  }
  return f;
}

/// A provably positive f that usually needs d > 0: f_lambda (sphere minimum
/// (2 - lambda)/4 for lambda < 2) plus eps * H with eps * sum |H_{mu nu}|
/// at most half that minimum. On the sphere |z^mu conj(z)^nu| <= 1, so the
/// perturbation cannot reach zero.
inline BihomPoly<G> random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> tenth(0, 19);
  const Q lambda = frac(tenth(rng), 10);
  auto h = random_hermitian(rng, 2, 2);
  Q bound(0);
  for (const auto& [key, c] : h.terms()) bound += abs(c.re()) + abs(c.im());
  auto f = f_lambda(lambda);
  if (sgn(bound) == 0) return f;
  const Q eps = (2 - lambda) / (8 * bound);
  f += h.scaled(G(eps));
  return f;
}

inline std::vector<G> random_point(std::mt19937_64& rng, int n) {
  std::vector<G> z;
  for (int j = 0; j < n; ++j) z.push_back(random_gauss(rng, 3, 3));
  return z;
}

inline std::vector<Complex> random_point_float(std::mt19937_64& rng, int n, double radius = 1.0) {
  std::normal_distribution<double> g;
  std::vector<Complex> z;
  for (int j = 0; j < n; ++j) z.emplace_back(radius * g(rng), radius * g(rng));
  return z;
}

/// Random Hermitian matrix with small Gaussian-rational entries.
inline HermMatrix<G> random_herm_matrix(std::mt19937_64& rng, std::size_t size) {
  std::vector<G> e(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    e[i * size + i] = G(random_rational(rng));
    for (std::size_t j = i + 1; j < size; ++j) {
      const G c = random_gauss(rng);
      e[i * size + j] = c;
      e[j * size + i] = conj(c);
    }
  }
  return HermMatrix<G>::square(size, std::move(e));
}

/// Exact v* M v, computed entrywise without the library's quadratic_form.
inline Q oracle_quadratic_form(const HermMatrix<G>& m, const std::vector<G>& v) {
  G acc;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) acc += conj(v[i]) * m(i, j) * v[j];
  return acc.re();
}

inline Q oracle_quadratic_form(const BihomPoly<G>& f, const std::vector<G>& v) {
  return oracle_quadratic_form(to_matrix(f), v);
}

}  // namespace hermsos::testing
