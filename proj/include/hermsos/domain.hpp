#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hermsos/poly.hpp"

namespace hermsos {

struct UnitBall {
  int n;
};

struct Polydisc {
  int n;
};

/// |z_1|^2 + |z_2|^{2p} < 1 in C^2.
struct Egg {
  int p;
};

/// ||A z|| < 1 for invertible A (row-major n x n, Gaussian rationals).
struct LinearBall {
  int n;
  std::vector<GaussRational> a;
};

/// A point cloud standing in for a domain; `volume` weights the average.
struct Sampled {
  int n;
  std::vector<Complex> points;  // row-major, n per point
  double volume;
};

/// Bounded circled domain descriptor.
class DomainSpec {
 public:
  using Kind = std::variant<UnitBall, Polydisc, Egg, LinearBall, Sampled>;

  explicit DomainSpec(Kind kind);

  static DomainSpec ball(int n) { return DomainSpec(UnitBall{n}); }
  static DomainSpec polydisc(int n) { return DomainSpec(Polydisc{n}); }
  static DomainSpec egg(int p) { return DomainSpec(Egg{p}); }
  static DomainSpec linear_ball(int n, std::vector<GaussRational> a) { return DomainSpec(LinearBall{n, std::move(a)}); }
  static DomainSpec sampled(int n, std::vector<Complex> points, double volume) {
    return DomainSpec(Sampled{n, std::move(points), volume});
  }

  const Kind& kind() const { return kind_; }
  int dim() const;
  /// "ball", "polydisc", "egg:p", "linear-ball", "sampled".
  std::string id() const;

  /// Invariant under independent rotations of each coordinate.
  bool reinhardt() const;
  bool has_closed_form_gram() const;
  /// Smoothly bounded, pseudoconvex, finite type.
  bool hypotheses_met() const;

  /// Volume relative to which closed-form Grams are stored: true inner
  /// products equal scale() times the stored entries.
  double scale() const;

  bool contains(std::span<const Complex> z) const;
  /// Radii of the smallest axis-aligned polydisc containing the domain.
  std::vector<double> bounding_radii() const;

  std::size_t sample_count() const;

 private:
  Kind kind_;
};

enum class GramProvenance { ClosedForm, MonteCarlo };

/// c_{alpha beta} = <z^alpha, z^beta> / scale over the degree-d basis.
template <ScalarType S>
struct GramMatrix {
  std::string domain;
  int n = 0;
  int d = 0;
  std::vector<S> entries;          // N x N, row-major
  std::vector<double> std_errors;  // Monte-Carlo provenance only
  GramProvenance provenance = GramProvenance::ClosedForm;
  double scale = 1.0;
  bool diagonal = false;

  std::size_t size() const { return basis_size(n, d); }
  const S& operator()(std::size_t i, std::size_t j) const { return entries[i * size() + j]; }
};

struct GramOptions {
  /// Degree limit for dense (non-Reinhardt or sampled) Grams.
  int max_dense_degree = 12;
  /// Degree limit for diagonal closed-form Grams.
  int max_diagonal_degree = 64;
};

/// Closed-form Gram in exact (S = GaussRational) or float arithmetic; a
/// sampled domain is only available in the float tower (GramUnavailable
/// otherwise). Throws DegreeOverflow past the configured limits.
template <ScalarType S>
GramMatrix<S> gram(const DomainSpec& domain, int d, const GramOptions& options = {});

/// Phi^d_k obtained by Cholesky orthonormalization against the Gram;
/// k-th entry has coefficients row k of G^{-1} where c = G G*.
std::vector<HoloPoly<Complex>> orthonormal_basis(const DomainSpec& domain, int d, const GramOptions& options = {});

/// ||Phi^d(z)||^2 = sum_{alpha,beta} (c^{-1})_{beta alpha} z^alpha conj(z)^beta,
/// computed without square roots.
template <ScalarType S>
BihomPoly<S> phi_squared_norm(const DomainSpec& domain, int d, const GramOptions& options = {});

/// Exact inverse of a Gram (or any invertible square matrix); throws
/// std::domain_error when singular.
template <ScalarType S>
std::vector<S> invert(std::span<const S> m, std::size_t size);

// ------------------------------------------------------------ Monte Carlo

struct McOptions {
  /// Number of accepted points (rejection sampling) or points used (sampled).
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct McEstimate {
  Complex value;
  /// sqrt(E|X - EX|^2 / N): covers real and imaginary parts jointly.
  double std_error = 0.0;
};

/// Volume-weighted estimates of integral_Omega g_k(z) dV for a family of
/// integrands evaluated together from one sample stream. `integrand`
/// writes `count` values for point z into `out` and may be called from
/// several threads at once. Deterministic in the seed regardless of `jobs`.
using Integrand = std::function<void(std::span<const Complex> z, std::span<Complex> out)>;
std::vector<McEstimate> mc_integrate(const DomainSpec& domain, std::size_t count, const Integrand& integrand,
                                     const McOptions& options);

/// <p, q>_Omega = integral p conj(q) dV (unnormalized: no scale divided out).
template <ScalarType S>
McEstimate mc_inner_product(const DomainSpec& domain, const HoloPoly<S>& p, const HoloPoly<S>& q,
                            const McOptions& options);

/// Every Gram entry at degree d by Monte Carlo, divided by domain.scale()
/// so it is comparable with the closed form.
GramMatrix<Complex> mc_gram(const DomainSpec& domain, int d, const McOptions& options);

/// First moments of a sampled cloud vanish within 3 standard errors, a
/// necessary condition for being circled.
bool circled_spot_check(const DomainSpec& domain, const McOptions& options);

}  // namespace hermsos
