#include "hermsos/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hermsos/errors.hpp"
#include "hermsos/random.hpp"

namespace hermsos {

using std::conj;

namespace {

/// l_k(z) = sum_a L_{a k} z^{basis[perm[a]]}
template <ScalarType S>
HoloPoly<S> column_form(const LdlFactorization<S>& f, const MonomialBasis& basis, std::size_t k) {
  HoloPoly<S> p(basis.num_vars(), basis.degree());
  for (std::size_t a = k; a < f.size; ++a) {
    const S& v = f.l(a, k);
    if (!is_exact_zero(v)) p.add_term(basis[f.perm[a]], v);
  }
  return p;
}

std::string entry_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

template <ScalarType S>
DecomposeResult<S> decompose(const BihomPoly<S>& f, bool strict, ProductLabel label, const LdlOptions& options) {
  auto result = ldlt_psd(to_matrix(f), options);
  if (auto* w = std::get_if<NegativityWitness<S>>(&result)) return std::move(*w);
  auto& factor = std::get<LdlFactorization<S>>(result);
  if (strict && !factor.positive_definite()) {
    return StrictnessViolation{factor.skipped.empty() ? factor.rank() : factor.skipped.front(), factor.rank(),
                               factor.size};
  }

  SosCertificate<S> cert;
  cert.n = f.num_vars();
  cert.degree = f.bidegree();
  cert.label = std::move(label);
  cert.rank = factor.rank();
  cert.strict = strict;
  cert.numeric = factor.numeric;

  MonomialBasis basis(f.num_vars(), f.bidegree());
  for (std::size_t k = 0; k < factor.size; ++k) {
    if (!(factor.pivots[k] > 0)) continue;
    const double root = std::sqrt(to_double(factor.pivots[k]));
    HoloPoly<Complex> h(f.num_vars(), f.bidegree());
    for (std::size_t a = k; a < factor.size; ++a) {
      const S& v = factor.l(a, k);
      if (!is_exact_zero(v)) h.add_term(basis[factor.perm[a]], root * to_complex(v));
    }
    cert.components.push_back(std::move(h));
  }
  cert.factor = std::move(factor);
  return cert;
}

template <ScalarType S>
BihomPoly<S> exact_sum_of_squares(const SosCertificate<S>& cert) {
  MonomialBasis basis(cert.n, cert.degree);
  std::vector<HoloPoly<S>> forms;
  std::vector<RealOf<S>> weights;
  for (std::size_t k = 0; k < cert.factor.size; ++k) {
    if (!(cert.factor.pivots[k] > 0)) continue;
    forms.push_back(column_form(cert.factor, basis, k));
    weights.push_back(cert.factor.pivots[k]);
  }
  if (forms.empty()) return BihomPoly<S>(cert.n, cert.degree);
  return weighted_squared_norm(std::span<const HoloPoly<S>>(forms), std::span<const RealOf<S>>(weights));
}

std::vector<std::vector<Complex>> residual_grid(int n) {
  std::mt19937_64 rng(0x243F6A8885A308D3ULL);
  std::vector<std::vector<Complex>> pts;
  for (int j = 0; j < n; ++j) {
    std::vector<Complex> e(static_cast<std::size_t>(n), Complex(0));
    e[static_cast<std::size_t>(j)] = 1.0;
    pts.push_back(std::move(e));
  }
  for (int k = 0; k < 64; ++k) pts.push_back(sphere_point(rng, n));
  return pts;
}

template <ScalarType S>
VerifyReport verify(const SosCertificate<S>& cert, const BihomPoly<S>& product) {
  if (cert.n != product.num_vars() || cert.degree != product.bidegree())
    throw DimensionMismatch("verify: certificate is for (n=" + std::to_string(cert.n) +
                            ", degree=" + std::to_string(cert.degree) + "), product has (n=" +
                            std::to_string(product.num_vars()) + ", degree=" + std::to_string(product.bidegree()) +
                            ")");
  const auto& f = cert.factor;
  const std::size_t size = basis_size(cert.n, cert.degree);
  VerifyReport report;
  auto fail = [&](std::string why) {
    report.pass = false;
    report.reason = std::move(why);
    return report;
  };

  if (f.size != size || f.perm.size() != size || f.lower.size() != size * size || f.pivots.size() != size)
    return fail("factorization has the wrong shape for basis size " + std::to_string(size));
  std::vector<bool> seen(size, false);
  for (auto p : f.perm) {
    if (p >= size || seen[p]) return fail("perm is not a permutation");
    seen[p] = true;
  }
  std::size_t positive = 0;
  for (std::size_t k = 0; k < size; ++k) {
    if (f.pivots[k] < 0) return fail("negative pivot D[" + std::to_string(k) + "]");
    if (f.pivots[k] > 0) ++positive;
    for (std::size_t j = 0; j < size; ++j) {
      const S& v = f.l(k, j);
      if (j == k && !(v == S(1))) return fail("L" + entry_text(k, j) + " is not 1");
      if (j > k && !is_exact_zero(v)) return fail("L" + entry_text(k, j) + " above the diagonal");
      if (j < k && f.pivots[j] == 0 && !is_exact_zero(v)) {
        report.entry = std::make_pair(k, j);
        return fail("L" + entry_text(k, j) + " is nonzero in a zero-pivot column");
      }
    }
  }
  if (positive != cert.rank) return fail("rank does not match the number of positive pivots");
  if (cert.strict && positive != size) return fail("strict certificate has a zero pivot");
  if (cert.components.size() != positive) return fail("one component per positive pivot required");

  const HermMatrix<S> target = to_matrix(product);
  const HermMatrix<S> replay = reconstruct(f, cert.n, cert.degree);
  const double tol = ScalarTraits<S>::exact ? 0.0 : 1e-9 * std::max(1.0, target.max_abs());
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      bool same;
      if constexpr (ScalarTraits<S>::exact) {
        same = replay(i, j) == target(i, j);
      } else {
        same = std::abs(replay(i, j) - target(i, j)) <= tol;
      }
      if (!same) {
        report.entry = std::make_pair(i, j);
        return fail("P*LDL*P differs from the product matrix at " + entry_text(i, j));
      }
    }

  double worst = 0.0;
  double worst_bound = 0.0;
  double worst_ratio = -1.0;
  for (const auto& z : residual_grid(cert.n)) {
    const std::span<const Complex> zs(z);
    double sos = 0.0;
    for (const auto& h : cert.components) sos += std::norm(h.evaluate_complex(zs));
    const double value = product.evaluate_complex(zs).real();
    const double r = std::abs(value - sos);
    const double bound = 1e-8 * std::max(1.0, product.evaluate_abs(zs));
    if (r / bound > worst_ratio) {
      worst_ratio = r / bound;
      worst = r;
      worst_bound = bound;
    }
  }
  report.residual = worst;
  report.residual_bound = worst_bound;
  if (worst > worst_bound) return fail("numeric residual exceeds bound");
  report.pass = true;
  report.reason = "ok";
  return report;
}

template DecomposeResult<GaussRational> decompose(const BihomPoly<GaussRational>&, bool, ProductLabel,
                                                  const LdlOptions&);
template DecomposeResult<Complex> decompose(const BihomPoly<Complex>&, bool, ProductLabel, const LdlOptions&);
template BihomPoly<GaussRational> exact_sum_of_squares(const SosCertificate<GaussRational>&);
template BihomPoly<Complex> exact_sum_of_squares(const SosCertificate<Complex>&);
template VerifyReport verify(const SosCertificate<GaussRational>&, const BihomPoly<GaussRational>&);
template VerifyReport verify(const SosCertificate<Complex>&, const BihomPoly<Complex>&);

}  // namespace hermsos
