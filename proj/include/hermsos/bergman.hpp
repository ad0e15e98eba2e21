#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "hermsos/domain.hpp"

namespace hermsos {

/// Bergman kernel truncated to polynomial degrees <= max_degree, held as
/// per-degree orthonormal bases:
///   K(z, zeta) = sum_{d <= D} sum_k Phi^d_k(z) conj(Phi^d_k(zeta)).
/// Values are relative to the domain's scale convention.
class TruncatedKernel {
 public:
  TruncatedKernel(DomainSpec domain, int max_degree, const GramOptions& options = {});

  const DomainSpec& domain() const { return domain_; }
  int max_degree() const { return max_degree_; }
  const std::vector<std::vector<HoloPoly<Complex>>>& bases() const { return bases_; }

  Complex operator()(std::span<const Complex> z, std::span<const Complex> zeta) const;
  /// Contribution of degree d alone.
  Complex degree_term(int d, std::span<const Complex> z, std::span<const Complex> zeta) const;
  double diagonal(std::span<const Complex> z) const;
  /// K_D(z, z) for every D = 0..max_degree (partial sums).
  std::vector<double> diagonal_partial_sums(std::span<const Complex> z) const;

 private:
  DomainSpec domain_;
  int max_degree_;
  std::vector<std::vector<HoloPoly<Complex>>> bases_;
};

inline Complex kernel_eval(const TruncatedKernel& k, std::span<const Complex> z, std::span<const Complex> zeta) {
  return k(z, zeta);
}

/// sum_{d <= D} ||Phi^d(z)||^2 as exact bihomogeneous pieces, one per degree.
std::vector<BihomPoly<GaussRational>> exact_kernel_diagonal(const DomainSpec& domain, int max_degree,
                                                            const GramOptions& options = {});

/// K_D(z, z) in exact arithmetic at a Gaussian-rational point.
Rational exact_kernel_diagonal_value(const DomainSpec& domain, int max_degree, std::span<const GaussRational> z,
                                     const GramOptions& options = {});

struct ReproduceReport {
  /// Monte-Carlo <p, K(., zeta)> with the scale divided out.
  McEstimate estimate;
  Complex reference;
  bool within_3_sigma = false;
};

/// Monte-Carlo reproduction check over the truncated kernel. Throws
/// DegreeOverflow when deg p > max_degree.
ReproduceReport reproduce(const TruncatedKernel& kernel, const HoloPoly<Complex>& p, std::span<const Complex> zeta,
                          const McOptions& options);

struct ExactReproduceReport {
  bool pass = false;
  /// sum_k <p, Phi_k> Phi_k as a polynomial; equals p when the identity holds.
  HoloPoly<GaussRational> reproduced;
  GaussRational value;
  GaussRational reference;
};

/// Exact coefficient identity sum_beta c_{alpha beta} (c^{-1})_{beta gamma} = delta
/// applied to p, then evaluated at zeta. Needs a closed-form Gram.
ExactReproduceReport reproduce_exact(const DomainSpec& domain, int max_degree, const HoloPoly<GaussRational>& p,
                                     std::span<const GaussRational> zeta, const GramOptions& options = {});

/// CSV rows "D,z_re...,z_im...,K_diag" for each point and each D.
void write_diagonal_csv(std::ostream& out, const TruncatedKernel& kernel,
                        const std::vector<std::vector<Complex>>& points);

}  // namespace hermsos
