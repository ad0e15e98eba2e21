#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hermsos/ldl.hpp"

namespace hermsos {

/// What a certificate is about: the product m(z) f(z, conj z) with
/// m = ||z||^{2d} ("euclidean") or ||Phi^d||^2 on a domain.
struct ProductLabel {
  std::string domain = "euclidean";
  int d = 0;
};

/// A squared-norm representation of a bihomogeneous polynomial, with the
/// root-free factorization as the exact part and the components h_k as
/// floating-point companions.
template <ScalarType S>
struct SosCertificate {
  int n = 0;
  /// Bidegree of the certified (product) polynomial.
  int degree = 0;
  ProductLabel label;
  LdlFactorization<S> factor;
  /// h_k = sqrt(D_k) * sum_a L_{a k} z^{basis[perm[a]]}, one per positive pivot.
  std::vector<HoloPoly<Complex>> components;
  std::size_t rank = 0;
  bool strict = false;
  bool numeric = false;
};

/// Strict mode was requested and the factorization has a zero pivot.
struct StrictnessViolation {
  std::size_t position = 0;
  std::size_t rank = 0;
  std::size_t size = 0;
};

template <ScalarType S>
using DecomposeResult = std::variant<SosCertificate<S>, NegativityWitness<S>, StrictnessViolation>;

template <ScalarType S>
DecomposeResult<S> decompose(const BihomPoly<S>& f, bool strict = false, ProductLabel label = {},
                             const LdlOptions& options = {});

/// The exact root-free replay sum_k D_k |l_k(z)|^2 with l_k built from the
/// columns of L; equals f when the certificate is sound.
template <ScalarType S>
BihomPoly<S> exact_sum_of_squares(const SosCertificate<S>& cert);

struct VerifyReport {
  bool pass = false;
  std::string reason;
  /// First differing matrix entry (row, column) in the graded-lex basis.
  std::optional<std::pair<std::size_t, std::size_t>> entry;
  double residual = 0.0;
  double residual_bound = 0.0;
};

/// Independent replay: structural checks on (P, L, D), exact comparison
/// of P* L D L* P with the matrix of `product`, and the numeric residual
/// |product(z) - sum |h_k(z)|^2| on a fixed sample grid.
template <ScalarType S>
VerifyReport verify(const SosCertificate<S>& cert, const BihomPoly<S>& product);

/// Fixed, seed-independent points on the unit sphere of C^n used by verify.
std::vector<std::vector<Complex>> residual_grid(int n);

}  // namespace hermsos
