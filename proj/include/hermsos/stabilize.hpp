#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hermsos/certificate.hpp"
#include "hermsos/domain.hpp"

namespace hermsos {

/// Best value of f found on the unit sphere. Advisory: a positive minimum
/// proves nothing, a negative value at `argmin` disproves positivity.
struct SphereMinEstimate {
  double minimum = 0.0;
  std::vector<Complex> argmin;
  std::size_t samples = 0;
  std::size_t refinements = 0;
};

/// Quasi-random (Halton) sphere sampling followed by multi-start projected
/// descent from the best samples. Throws ZeroPolynomial.
SphereMinEstimate check_positive_on_sphere(const BihomPoly<Complex>& f, std::size_t samples = 2048,
                                           std::size_t refinements = 60);
SphereMinEstimate check_positive_on_sphere(const BihomPoly<GaussRational>& f, std::size_t samples = 2048,
                                           std::size_t refinements = 60);

enum class SearchMode { Euclidean, Domain };
enum class TrialVerdict { Certified, NotPsd, NotStrict };
enum class StabilizationOutcome { Stabilized, CapExceeded, HypothesisViolated };

template <ScalarType S>
struct DegreeTrial {
  int d = 0;
  TrialVerdict verdict = TrialVerdict::NotPsd;
  std::optional<NegativityWitness<S>> witness;
  std::optional<SosCertificate<S>> certificate;
  bool verified = false;
};

template <ScalarType S>
struct StabilizationResult {
  SearchMode mode = SearchMode::Euclidean;
  std::string domain = "euclidean";
  StabilizationOutcome outcome = StabilizationOutcome::CapExceeded;
  /// First certified degree.
  std::optional<int> d0;
  /// Every tested degree in increasing order, including the tail past d0
  /// in domain mode.
  std::vector<DegreeTrial<S>> trials;
  int cap = 0;
  bool numeric_gram = false;
  bool hypotheses_met = true;
  std::optional<SphereMinEstimate> sphere;
  /// Rationalized point with f < 0 (exactly, in the exact tower).
  std::vector<GaussRational> disproof_point;
  std::optional<double> disproof_value;

  const DegreeTrial<S>* trial(int d) const;
  const SosCertificate<S>* certificate() const;
};

struct StabilizeOptions {
  int d_max = 50;
  bool strict = false;
  /// Reject f with a negative sphere value before searching.
  bool precheck = true;
  std::size_t sphere_samples = 2048;
  std::size_t sphere_refinements = 60;
  /// > 1 evaluates a window of candidate degrees concurrently.
  unsigned jobs = 1;
  /// Domain mode: extra degrees tested after the first success.
  int tail = 2;
  GramOptions gram;
  LdlOptions ldl;
};

/// m(z) with m = ||z||^{2d} (no domain) or ||Phi^d||^2.
template <ScalarType S>
BihomPoly<S> multiplier(const DomainSpec* domain, int n, int d, const GramOptions& options = {});

/// The polynomial certified at degree d: multiplier * f.
template <ScalarType S>
BihomPoly<S> stabilization_product(const BihomPoly<S>& f, const DomainSpec* domain, int d,
                                   const GramOptions& options = {});

/// Least d <= d_max with ||z||^{2d} f a squared norm. Throws ZeroPolynomial
/// and NonHermitian.
template <ScalarType S>
StabilizationResult<S> stabilize_euclidean(const BihomPoly<S>& f, const StabilizeOptions& options = {});

/// First d <= d_max with ||Phi^d||^2 f a squared norm on `domain`, plus the
/// verdicts at the next `tail` degrees. Throws ZeroPolynomial, NonHermitian
/// and GramUnavailable.
template <ScalarType S>
StabilizationResult<S> stabilize_domain(const BihomPoly<S>& f, const DomainSpec& domain,
                                        const StabilizeOptions& options = {});

}  // namespace hermsos
