#include "hermsos/bergman.hpp"

#include <cmath>
#include <string>

#include "hermsos/errors.hpp"

namespace hermsos {

TruncatedKernel::TruncatedKernel(DomainSpec domain, int max_degree, const GramOptions& options)
    : domain_(std::move(domain)), max_degree_(max_degree) {
  if (max_degree < 0) throw InputError("kernel truncation degree must be non-negative");
  for (int d = 0; d <= max_degree; ++d) bases_.push_back(orthonormal_basis(domain_, d, options));
}

Complex TruncatedKernel::degree_term(int d, std::span<const Complex> z, std::span<const Complex> zeta) const {
  Complex acc(0);
  for (const auto& phi : bases_[static_cast<std::size_t>(d)])
    acc += phi.evaluate_complex(z) * std::conj(phi.evaluate_complex(zeta));
  return acc;
}

Complex TruncatedKernel::operator()(std::span<const Complex> z, std::span<const Complex> zeta) const {
  Complex acc(0);
  for (int d = 0; d <= max_degree_; ++d) acc += degree_term(d, z, zeta);
  return acc;
}

double TruncatedKernel::diagonal(std::span<const Complex> z) const { return (*this)(z, z).real(); }

std::vector<double> TruncatedKernel::diagonal_partial_sums(std::span<const Complex> z) const {
  std::vector<double> out;
  double acc = 0.0;
  for (int d = 0; d <= max_degree_; ++d) {
    acc += degree_term(d, z, z).real();
    out.push_back(acc);
  }
  return out;
}

std::vector<BihomPoly<GaussRational>> exact_kernel_diagonal(const DomainSpec& domain, int max_degree,
                                                            const GramOptions& options) {
  std::vector<BihomPoly<GaussRational>> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(phi_squared_norm<GaussRational>(domain, d, options));
  return out;
}

Rational exact_kernel_diagonal_value(const DomainSpec& domain, int max_degree, std::span<const GaussRational> z,
                                     const GramOptions& options) {
  Rational acc(0);
  for (const auto& piece : exact_kernel_diagonal(domain, max_degree, options)) acc += eval(piece, z);
  return acc;
}

ReproduceReport reproduce(const TruncatedKernel& kernel, const HoloPoly<Complex>& p, std::span<const Complex> zeta,
                          const McOptions& options) {
  if (p.degree() > kernel.max_degree())
    throw DegreeOverflow("reproduce: polynomial degree " + std::to_string(p.degree()) + " exceeds truncation " +
                         std::to_string(kernel.max_degree()));
  // Phi_k(zeta) are fixed; the integrand is p(w) sum_k conj(Phi_k(w)) Phi_k(zeta).
  std::vector<std::pair<const HoloPoly<Complex>*, Complex>> terms;
  for (const auto& level : kernel.bases())
    for (const auto& phi : level) terms.emplace_back(&phi, phi.evaluate_complex(zeta));
  Integrand f = [&](std::span<const Complex> w, std::span<Complex> out) {
    Complex k(0);
    for (const auto& [phi, at_zeta] : terms) k += std::conj(phi->evaluate_complex(w)) * at_zeta;
    out[0] = p.evaluate_complex(w) * k;
  };
  ReproduceReport report;
  auto est = mc_integrate(kernel.domain(), 1, f, options).front();
  const double scale = kernel.domain().scale();
  report.estimate = {est.value / scale, est.std_error / scale};
  report.reference = p.evaluate_complex(zeta);
  report.within_3_sigma = std::abs(report.estimate.value - report.reference) <= 3.0 * report.estimate.std_error;
  return report;
}

ExactReproduceReport reproduce_exact(const DomainSpec& domain, int max_degree, const HoloPoly<GaussRational>& p,
                                     std::span<const GaussRational> zeta, const GramOptions& options) {
  const int d = p.degree();
  if (d > max_degree)
    throw DegreeOverflow("reproduce_exact: polynomial degree " + std::to_string(d) + " exceeds truncation " +
                         std::to_string(max_degree));
  if (p.num_vars() != domain.dim()) throw DimensionMismatch("reproduce_exact: dimension mismatch");
  // Only degree d contributes: the other degrees are orthogonal to p.
  const auto g = gram<GaussRational>(domain, d, options);
  const std::size_t sz = g.size();
  const auto inv = invert(std::span<const GaussRational>(g.entries), sz);
  MonomialBasis basis(p.num_vars(), d);
  ExactReproduceReport report{false, HoloPoly<GaussRational>(p.num_vars(), d), GaussRational(0), GaussRational(0)};
  // <p, Phi_k> Phi_k summed over k: coefficient vector p^T c c^{-1}.
  for (std::size_t gamma = 0; gamma < sz; ++gamma) {
    GaussRational acc(0);
    for (const auto& [alpha, pc] : p.terms()) {
      const std::size_t a = basis.index_of(alpha);
      GaussRational row(0);
      for (std::size_t b = 0; b < sz; ++b) {
        if (g(a, b).is_zero() || inv[b * sz + gamma].is_zero()) continue;
        row += g(a, b) * inv[b * sz + gamma];
      }
      acc += pc * row;
    }
    report.reproduced.add_term(basis[gamma], acc);
  }
  report.value = report.reproduced.evaluate(zeta);
  report.reference = p.evaluate(zeta);
  report.pass = report.reproduced == p && report.value == report.reference;
  return report;
}

void write_diagonal_csv(std::ostream& out, const TruncatedKernel& kernel,
                        const std::vector<std::vector<Complex>>& points) {
  const int n = kernel.domain().dim();
  out << "D";
  for (int j = 1; j <= n; ++j) out << ",z" << j << "_re";
  for (int j = 1; j <= n; ++j) out << ",z" << j << "_im";
  out << ",K_diag\n";
  for (const auto& z : points) {
    const auto sums = kernel.diagonal_partial_sums(z);
    for (std::size_t d = 0; d < sums.size(); ++d) {
      out << d;
      for (const auto& c : z) out << "," << format_double(c.real());
      for (const auto& c : z) out << "," << format_double(c.imag());
      out << "," << format_double(sums[d]) << "\n";
    }
  }
}

}  // namespace hermsos
