#include "hermsos/stabilize.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "hermsos/errors.hpp"

namespace hermsos {

template <ScalarType S>
const DegreeTrial<S>* StabilizationResult<S>::trial(int d) const {
  for (const auto& t : trials)
    if (t.d == d) return &t;
  return nullptr;
}

template <ScalarType S>
const SosCertificate<S>* StabilizationResult<S>::certificate() const {
  if (!d0) return nullptr;
  const auto* t = trial(*d0);
  return t && t->certificate ? &*t->certificate : nullptr;
}

template <ScalarType S>
BihomPoly<S> multiplier(const DomainSpec* domain, int n, int d, const GramOptions& options) {
  if (!domain) return norm_power<S>(n, d);
  if (domain->dim() != n)
    throw DimensionMismatch("domain has dimension " + std::to_string(domain->dim()) + ", polynomial has " +
                            std::to_string(n) + " variables");
  try {
    return phi_squared_norm<S>(*domain, d, options);
  } catch (const DegreeOverflow& e) {
    throw GramUnavailable(e.what());
  } catch (const InsufficientSamples& e) {
    throw GramUnavailable(e.what());
  }
}

template <ScalarType S>
BihomPoly<S> stabilization_product(const BihomPoly<S>& f, const DomainSpec* domain, int d,
                                   const GramOptions& options) {
  return mul(multiplier<S>(domain, f.num_vars(), d, options), f);
}

namespace {

template <ScalarType S>
DegreeTrial<S> run_trial(const BihomPoly<S>& f, const DomainSpec* domain, int d, const StabilizeOptions& options) {
  const auto product = stabilization_product(f, domain, d, options.gram);
  ProductLabel label{domain ? domain->id() : "euclidean", d};
  auto result = decompose(product, options.strict, label, options.ldl);
  DegreeTrial<S> t;
  t.d = d;
  if (auto* cert = std::get_if<SosCertificate<S>>(&result)) {
    const auto report = verify(*cert, product);
    if (!report.pass) throw std::logic_error("certificate at d=" + std::to_string(d) + " failed replay: " + report.reason);
    t.verdict = TrialVerdict::Certified;
    t.verified = true;
    t.certificate = std::move(*cert);
  } else if (auto* w = std::get_if<NegativityWitness<S>>(&result)) {
    t.verdict = TrialVerdict::NotPsd;
    t.witness = std::move(*w);
  } else {
    t.verdict = TrialVerdict::NotStrict;
  }
  return t;
}

template <ScalarType S>
bool precheck(const BihomPoly<S>& f, const StabilizeOptions& options, StabilizationResult<S>& result) {
  if (f.is_zero()) throw ZeroPolynomial("stabilize: f is identically zero");
  if (!f.is_hermitian()) throw NonHermitian("stabilize: f is not Hermitian-symmetric");
  if (!options.precheck) return true;
  result.sphere = check_positive_on_sphere(f, options.sphere_samples, options.sphere_refinements);
  if (result.sphere->minimum >= 0.0) return true;
  if constexpr (ScalarTraits<S>::exact) {
    // Doubles are dyadic rationals, so the float argmin is an exact point.
    std::vector<GaussRational> z;
    for (const auto& c : result.sphere->argmin) z.emplace_back(Rational(c.real()), Rational(c.imag()));
    const Rational v = eval(f, std::span<const GaussRational>(z));
    if (sgn(v) >= 0) return true;
    result.disproof_point = std::move(z);
    result.disproof_value = v.get_d();
  } else {
    if (result.sphere->minimum >= -1e-9 * std::max(1.0, f.max_abs_coeff())) return true;
    for (const auto& c : result.sphere->argmin) result.disproof_point.emplace_back(Rational(c.real()), Rational(c.imag()));
    result.disproof_value = result.sphere->minimum;
  }
  result.outcome = StabilizationOutcome::HypothesisViolated;
  return false;
}

template <ScalarType S>
void search(const BihomPoly<S>& f, const DomainSpec* domain, const StabilizeOptions& options, int keep_past,
            StabilizationResult<S>& result) {
  result.cap = options.d_max;
  int d = 0;
  while (d <= options.d_max && !result.d0) {
    const int window = options.jobs > 1 ? std::min<int>(static_cast<int>(options.jobs), options.d_max - d + 1) : 1;
    if (window == 1) {
      result.trials.push_back(run_trial(f, domain, d, options));
    } else {
      std::vector<std::future<DegreeTrial<S>>> pending;
      for (int k = 0; k < window; ++k)
        pending.push_back(std::async(std::launch::async, [&, dd = d + k] { return run_trial(f, domain, dd, options); }));
      for (auto& p : pending) result.trials.push_back(p.get());
    }
    for (int k = 0; k < window; ++k) {
      const auto& t = result.trials[result.trials.size() - static_cast<std::size_t>(window - k)];
      if (t.verdict == TrialVerdict::Certified) {
        result.d0 = t.d;
        break;
      }
    }
    d += window;
  }
  // A concurrent window may run past d0; keep only what the caller wants.
  if (result.d0)
    std::erase_if(result.trials, [&](const DegreeTrial<S>& t) { return t.d > *result.d0 + keep_past; });
  result.outcome = result.d0 ? StabilizationOutcome::Stabilized : StabilizationOutcome::CapExceeded;
}

}  // namespace

template <ScalarType S>
StabilizationResult<S> stabilize_euclidean(const BihomPoly<S>& f, const StabilizeOptions& options) {
  StabilizationResult<S> result;
  result.mode = SearchMode::Euclidean;
  result.domain = "euclidean";
  result.cap = options.d_max;
  if (!precheck(f, options, result)) return result;
  search(f, nullptr, options, 0, result);
  return result;
}

template <ScalarType S>
StabilizationResult<S> stabilize_domain(const BihomPoly<S>& f, const DomainSpec& domain,
                                        const StabilizeOptions& options) {
  StabilizationResult<S> result;
  result.mode = SearchMode::Domain;
  result.domain = domain.id();
  result.cap = options.d_max;
  result.hypotheses_met = domain.hypotheses_met();
  result.numeric_gram = !domain.has_closed_form_gram();
  if (domain.dim() != f.num_vars())
    throw DimensionMismatch("stabilize_domain: domain dimension differs from the polynomial's");
  if (!precheck(f, options, result)) return result;
  search(f, &domain, options, options.tail, result);
  if (result.d0) {
    for (int k = 1; k <= options.tail; ++k) {
      if (!result.trial(*result.d0 + k)) result.trials.push_back(run_trial(f, &domain, *result.d0 + k, options));
    }
    std::sort(result.trials.begin(), result.trials.end(),
              [](const DegreeTrial<S>& a, const DegreeTrial<S>& b) { return a.d < b.d; });
  }
  return result;
}

#define HERMSOS_INSTANTIATE(S)                                                                               \
  template struct StabilizationResult<S>;                                                                    \
  template BihomPoly<S> multiplier<S>(const DomainSpec*, int, int, const GramOptions&);                      \
  template BihomPoly<S> stabilization_product(const BihomPoly<S>&, const DomainSpec*, int, const GramOptions&); \
  template StabilizationResult<S> stabilize_euclidean(const BihomPoly<S>&, const StabilizeOptions&);         \
  template StabilizationResult<S> stabilize_domain(const BihomPoly<S>&, const DomainSpec&, const StabilizeOptions&);

HERMSOS_INSTANTIATE(GaussRational)
HERMSOS_INSTANTIATE(Complex)

#undef HERMSOS_INSTANTIATE

}  // namespace hermsos
