#include "hermsos/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "hermsos/errors.hpp"
#include "hermsos/random.hpp"

namespace hermsos {

using std::conj;

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

template <ScalarType S>
S determinant(std::vector<S> m, std::size_t size) {
  S det(1);
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t p = k;
    if constexpr (ScalarTraits<S>::exact) {
      while (p < size && m[p * size + k].is_zero()) ++p;
    } else {
      for (std::size_t i = k + 1; i < size; ++i)
        if (std::abs(m[i * size + k]) > std::abs(m[p * size + k])) p = i;
    }
    if (p == size || is_exact_zero(m[p * size + k])) return S(0);
    if (p != k) {
      for (std::size_t j = 0; j < size; ++j) std::swap(m[k * size + j], m[p * size + j]);
      det = -det;
    }
    const S pivot = m[k * size + k];
    det *= pivot;
    for (std::size_t i = k + 1; i < size; ++i) {
      const S factor = m[i * size + k] / pivot;
      if (is_exact_zero(factor)) continue;
      for (std::size_t j = k; j < size; ++j) m[i * size + j] -= factor * m[k * size + j];
    }
  }
  return det;
}

int domain_dim(const DomainSpec::Kind& kind) {
  return std::visit(Overloaded{[](const UnitBall& b) { return b.n; }, [](const Polydisc& p) { return p.n; },
                               [](const Egg&) { return 2; }, [](const LinearBall& l) { return l.n; },
                               [](const Sampled& s) { return s.n; }},
                    kind);
}

/// Diagonal closed-form entry c_alpha (scale divided out).
Rational diagonal_gram_entry(const DomainSpec::Kind& kind, const MultiIndex& alpha) {
  return std::visit(
      Overloaded{
          [&](const UnitBall& b) -> Rational {
            // n! alpha! / (n + |alpha|)!
            return factorial(static_cast<unsigned>(b.n)) * alpha.factorial() /
                   factorial(static_cast<unsigned>(b.n + alpha.degree()));
          },
          [&](const Polydisc&) -> Rational {
            Rational r(1);
            for (int e : alpha.exponents()) r /= (e + 1);
            return r;
          },
          [&](const Egg& egg) -> Rational {
            // (1/p) a! / prod_{k=0}^{a+1} (beta + k), beta = (b+1)/p
            const int a = alpha[0];
            const Rational beta(alpha[1] + 1, egg.p);
            Rational r = factorial(static_cast<unsigned>(a)) / Rational(egg.p);
            for (int k = 0; k <= a + 1; ++k) r /= Rational(beta + k);
            r.canonicalize();
            return r;
          },
          [&](const auto&) -> Rational { throw GramUnavailable("domain has no diagonal closed-form Gram"); }},
      kind);
}

std::vector<GaussRational> inverse_matrix(const LinearBall& l) {
  return invert(std::span<const GaussRational>(l.a), static_cast<std::size_t>(l.n));
}

}  // namespace

// -------------------------------------------------------------- DomainSpec

DomainSpec::DomainSpec(Kind kind) : kind_(std::move(kind)) {
  std::visit(Overloaded{[](const UnitBall& b) {
                          if (b.n < 1) throw InputError("ball: n must be positive");
                        },
                        [](const Polydisc& p) {
                          if (p.n < 1) throw InputError("polydisc: n must be positive");
                        },
                        [](const Egg& e) {
                          if (e.p < 1) throw InputError("egg: p must be a positive integer");
                        },
                        [](const LinearBall& l) {
                          if (l.n < 1) throw InputError("linear-ball: n must be positive");
                          const auto sz = static_cast<std::size_t>(l.n);
                          if (l.a.size() != sz * sz) throw InputError("linear-ball: A must be n x n");
                          if (determinant(l.a, sz).is_zero()) throw InputError("linear-ball: A must be invertible");
                        },
                        [](const Sampled& s) {
                          if (s.n < 1) throw InputError("sampled: n must be positive");
                          if (s.points.empty() || s.points.size() % static_cast<std::size_t>(s.n) != 0)
                            throw InputError("sampled: point list must hold n coordinates per point");
                          if (!(s.volume > 0.0)) throw InputError("sampled: volume must be positive");
                        }},
             kind_);
}

int DomainSpec::dim() const { return domain_dim(kind_); }

std::string DomainSpec::id() const {
  return std::visit(Overloaded{[](const UnitBall&) { return std::string("ball"); },
                               [](const Polydisc&) { return std::string("polydisc"); },
                               [](const Egg& e) { return "egg:" + std::to_string(e.p); },
                               [](const LinearBall&) { return std::string("linear-ball"); },
                               [](const Sampled&) { return std::string("sampled"); }},
                    kind_);
}

bool DomainSpec::reinhardt() const {
  if (const auto* l = std::get_if<LinearBall>(&kind_)) {
    // Reinhardt iff A*A is diagonal: then ||Az|| depends on |z_j| only.
    const auto sz = static_cast<std::size_t>(l->n);
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        if (i == j) continue;
        GaussRational g(0);
        for (std::size_t k = 0; k < sz; ++k) g += conj(l->a[k * sz + i]) * l->a[k * sz + j];
        if (!g.is_zero()) return false;
      }
    return true;
  }
  return !std::holds_alternative<Sampled>(kind_);
}

bool DomainSpec::has_closed_form_gram() const { return !std::holds_alternative<Sampled>(kind_); }

bool DomainSpec::hypotheses_met() const {
  return std::holds_alternative<UnitBall>(kind_) || std::holds_alternative<Egg>(kind_) ||
         std::holds_alternative<LinearBall>(kind_);
}

double DomainSpec::scale() const {
  return std::visit(Overloaded{[](const UnitBall& b) {
                                 return std::pow(std::numbers::pi, b.n) / factorial(static_cast<unsigned>(b.n)).get_d();
                               },
                               [](const Polydisc& p) { return std::pow(std::numbers::pi, p.n); },
                               [](const Egg&) { return std::numbers::pi * std::numbers::pi; },
                               [](const LinearBall& l) {
                                 const auto sz = static_cast<std::size_t>(l.n);
                                 const double det2 = determinant(l.a, sz).norm2().get_d();
                                 return std::pow(std::numbers::pi, l.n) /
                                        factorial(static_cast<unsigned>(l.n)).get_d() / det2;
                               },
                               [](const Sampled&) { return 1.0; }},
                    kind_);
}

bool DomainSpec::contains(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != dim()) throw DimensionMismatch("contains: point has wrong length");
  return std::visit(Overloaded{[&](const UnitBall&) {
                                 double s = 0.0;
                                 for (const auto& c : z) s += std::norm(c);
                                 return s < 1.0;
                               },
                               [&](const Polydisc&) {
                                 return std::all_of(z.begin(), z.end(), [](const Complex& c) { return std::norm(c) < 1.0; });
                               },
                               [&](const Egg& e) { return std::norm(z[0]) + std::pow(std::norm(z[1]), e.p) < 1.0; },
                               [&](const LinearBall& l) {
                                 const auto sz = static_cast<std::size_t>(l.n);
                                 double s = 0.0;
                                 for (std::size_t i = 0; i < sz; ++i) {
                                   Complex acc(0);
                                   for (std::size_t k = 0; k < sz; ++k) acc += l.a[i * sz + k].to_complex() * z[k];
                                   s += std::norm(acc);
                                 }
                                 return s < 1.0;
                               },
                               [&](const Sampled&) -> bool {
                                 throw InputError("membership is undefined for a sampled domain");
                               }},
                    kind_);
}

std::vector<double> DomainSpec::bounding_radii() const {
  const auto n = static_cast<std::size_t>(dim());
  if (const auto* l = std::get_if<LinearBall>(&kind_)) {
    const auto inv = inverse_matrix(*l);
    std::vector<double> r(n);
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += inv[j * n + k].norm2().get_d();
      r[j] = std::sqrt(s);
    }
    return r;
  }
  if (const auto* s = std::get_if<Sampled>(&kind_)) {
    std::vector<double> r(n, 0.0);
    for (std::size_t i = 0; i < s->points.size(); ++i) r[i % n] = std::max(r[i % n], std::abs(s->points[i]));
    return r;
  }
  return std::vector<double>(n, 1.0);
}

std::size_t DomainSpec::sample_count() const {
  if (const auto* s = std::get_if<Sampled>(&kind_)) return s->points.size() / static_cast<std::size_t>(s->n);
  return 0;
}

// ------------------------------------------------------------- linear algebra

template <ScalarType S>
std::vector<S> invert(std::span<const S> m, std::size_t size) {
  if (m.size() != size * size) throw DimensionMismatch("invert: matrix must be square");
  std::vector<S> a(m.begin(), m.end());
  std::vector<S> inv(size * size, S(0));
  for (std::size_t i = 0; i < size; ++i) inv[i * size + i] = S(1);
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t p = k;
    if constexpr (ScalarTraits<S>::exact) {
      while (p < size && a[p * size + k].is_zero()) ++p;
    } else {
      for (std::size_t i = k + 1; i < size; ++i)
        if (std::abs(a[i * size + k]) > std::abs(a[p * size + k])) p = i;
    }
    if (p == size || is_exact_zero(a[p * size + k])) throw std::domain_error("invert: singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < size; ++j) {
        std::swap(a[k * size + j], a[p * size + j]);
        std::swap(inv[k * size + j], inv[p * size + j]);
      }
    const S pivot = a[k * size + k];
    for (std::size_t j = 0; j < size; ++j) {
      a[k * size + j] /= pivot;
      inv[k * size + j] /= pivot;
    }
    for (std::size_t i = 0; i < size; ++i) {
      if (i == k) continue;
      const S factor = a[i * size + k];
      if (is_exact_zero(factor)) continue;
      for (std::size_t j = 0; j < size; ++j) {
        a[i * size + j] -= factor * a[k * size + j];
        inv[i * size + j] -= factor * inv[k * size + j];
      }
    }
  }
  return inv;
}

// -------------------------------------------------------------------- Grams

namespace {

GramMatrix<GaussRational> exact_gram(const DomainSpec& domain, int d, const GramOptions& options) {
  if (d < 0) throw InputError("gram: degree must be non-negative");
  GramMatrix<GaussRational> g;
  g.domain = domain.id();
  g.n = domain.dim();
  g.d = d;
  g.scale = domain.scale();
  g.provenance = GramProvenance::ClosedForm;
  MonomialBasis basis(g.n, d);
  const std::size_t sz = basis.size();
  g.entries.assign(sz * sz, GaussRational(0));

  if (const auto* l = std::get_if<LinearBall>(&domain.kind())) {
    if (d > options.max_dense_degree)
      throw DegreeOverflow("gram: degree " + std::to_string(d) + " exceeds the dense-Gram limit " +
                           std::to_string(options.max_dense_degree));
    // c = T c_ball T*, T the action of A^{-1} on V_d.
    const auto inv = inverse_matrix(*l);
    const DomainSpec ball = DomainSpec::ball(l->n);
    std::vector<Rational> ball_diag(sz);
    for (std::size_t i = 0; i < sz; ++i) ball_diag[i] = diagonal_gram_entry(ball.kind(), basis[i]);
    std::vector<GaussRational> t(sz * sz, GaussRational(0));
    for (std::size_t i = 0; i < sz; ++i) {
      auto image = substitute(HoloPoly<GaussRational>::monomial(basis[i]), std::span<const GaussRational>(inv));
      for (const auto& [gamma, c] : image.terms()) t[i * sz + basis.index_of(gamma)] = c;
    }
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        GaussRational acc(0);
        for (std::size_t k = 0; k < sz; ++k) {
          if (t[i * sz + k].is_zero() || t[j * sz + k].is_zero()) continue;
          acc += t[i * sz + k] * conj(t[j * sz + k]) * GaussRational(ball_diag[k]);
        }
        g.entries[i * sz + j] = acc;
      }
    g.diagonal = domain.reinhardt();
    return g;
  }

  if (d > options.max_diagonal_degree)
    throw DegreeOverflow("gram: degree " + std::to_string(d) + " exceeds the limit " +
                         std::to_string(options.max_diagonal_degree));
  for (std::size_t i = 0; i < sz; ++i) g.entries[i * sz + i] = GaussRational(diagonal_gram_entry(domain.kind(), basis[i]));
  g.diagonal = true;
  return g;
}

}  // namespace

template <ScalarType S>
GramMatrix<S> gram(const DomainSpec& domain, int d, const GramOptions& options) {
  if constexpr (ScalarTraits<S>::exact) {
    if (!domain.has_closed_form_gram())
      throw GramUnavailable("gram: " + domain.id() + " has no exact Gram; use the float tower");
    return exact_gram(domain, d, options);
  } else {
    if (!domain.has_closed_form_gram()) {
      if (d > options.max_dense_degree)
        throw DegreeOverflow("gram: degree " + std::to_string(d) + " exceeds the dense-Gram limit " +
                             std::to_string(options.max_dense_degree));
      const std::size_t pts = domain.sample_count();
      const std::size_t sz = basis_size(domain.dim(), d);
      if (pts < 10 * sz)
        throw InsufficientSamples("gram: " + std::to_string(pts) + " sample points cannot resolve a basis of size " +
                                  std::to_string(sz));
      McOptions mc;
      mc.samples = pts;
      return mc_gram(domain, d, mc);
    }
    auto exact = exact_gram(domain, d, options);
    GramMatrix<Complex> g;
    g.domain = exact.domain;
    g.n = exact.n;
    g.d = exact.d;
    g.scale = exact.scale;
    g.provenance = exact.provenance;
    g.diagonal = exact.diagonal;
    g.entries.reserve(exact.entries.size());
    for (const auto& e : exact.entries) g.entries.push_back(e.to_complex());
    return g;
  }
}

std::vector<HoloPoly<Complex>> orthonormal_basis(const DomainSpec& domain, int d, const GramOptions& options) {
  const auto g = gram<Complex>(domain, d, options);
  const auto sz = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXcd c(sz, sz);
  for (Eigen::Index i = 0; i < sz; ++i)
    for (Eigen::Index j = 0; j < sz; ++j) c(i, j) = g(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::LLT<Eigen::MatrixXcd> llt(c);
  if (llt.info() != Eigen::Success) throw GramUnavailable("orthonormal_basis: Gram is not positive definite");
  const Eigen::MatrixXcd r =
      llt.matrixL().solve(Eigen::MatrixXcd::Identity(sz, sz));  // G^{-1}, lower triangular
  MonomialBasis basis(g.n, d);
  std::vector<HoloPoly<Complex>> out;
  for (Eigen::Index k = 0; k < sz; ++k) {
    HoloPoly<Complex> phi(g.n, d);
    for (Eigen::Index a = 0; a <= k; ++a) phi.add_term(basis[static_cast<std::size_t>(a)], r(k, a));
    out.push_back(std::move(phi));
  }
  return out;
}

template <ScalarType S>
BihomPoly<S> phi_squared_norm(const DomainSpec& domain, int d, const GramOptions& options) {
  const auto g = gram<S>(domain, d, options);
  MonomialBasis basis(g.n, d);
  const std::size_t sz = basis.size();
  BihomPoly<S> out(g.n, d);
  if (g.diagonal) {
    for (std::size_t i = 0; i < sz; ++i) out.add_term(basis[i], basis[i], S(1) / g(i, i));
    return out;
  }
  const auto inv = invert(std::span<const S>(g.entries), sz);
  for (std::size_t a = 0; a < sz; ++a)
    for (std::size_t b = 0; b < sz; ++b) out.add_term(basis[a], basis[b], inv[b * sz + a]);
  return out;
}

// -------------------------------------------------------------- Monte Carlo

namespace {

constexpr std::size_t kBlock = 1 << 16;

struct BlockSums {
  std::vector<Complex> sum;
  std::vector<double> sum_sq;
  std::size_t accepted = 0;
  std::size_t proposed = 0;
};

BlockSums run_block(const DomainSpec& domain, const std::vector<double>& radii, std::size_t count,
                    const Integrand& integrand, std::uint64_t seed, std::uint64_t block, std::size_t target) {
  BlockSums s;
  s.sum.assign(count, Complex(0));
  s.sum_sq.assign(count, 0.0);
  auto rng = block_rng(seed, block);
  const std::size_t n = radii.size();
  std::vector<Complex> z(n);
  std::vector<Complex> vals(count);
  std::size_t guard = 0;
  while (s.accepted < target) {
    for (std::size_t j = 0; j < n; ++j) {
      const double r = radii[j] * std::sqrt(uniform01(rng));
      const double theta = 2.0 * std::numbers::pi * uniform01(rng);
      z[j] = std::polar(r, theta);
    }
    ++s.proposed;
    if (!domain.contains(z)) {
      if (++guard > 1000000 && s.accepted == 0) throw InsufficientSamples("rejection sampler: zero acceptance rate");
      continue;
    }
    ++s.accepted;
    integrand(z, vals);
    for (std::size_t k = 0; k < count; ++k) {
      s.sum[k] += vals[k];
      s.sum_sq[k] += std::norm(vals[k]);
    }
  }
  return s;
}

std::vector<McEstimate> finish(const std::vector<Complex>& sum, const std::vector<double>& sum_sq, std::size_t accepted,
                               double acceptance, double acceptance_var, double volume) {
  const auto nacc = static_cast<double>(accepted);
  std::vector<McEstimate> out(sum.size());
  for (std::size_t k = 0; k < sum.size(); ++k) {
    const Complex mean = sum[k] / nacc;
    const double var = std::max(0.0, (sum_sq[k] / nacc - std::norm(mean)) * nacc / std::max(1.0, nacc - 1.0));
    const double var_mean = var / nacc;
    out[k].value = volume * acceptance * mean;
    out[k].std_error = volume * std::sqrt(acceptance_var * std::norm(mean) + acceptance * acceptance * var_mean +
                                          acceptance_var * var_mean);
  }
  return out;
}

}  // namespace

std::vector<McEstimate> mc_integrate(const DomainSpec& domain, std::size_t count, const Integrand& integrand,
                                     const McOptions& options) {
  if (options.samples < 2) throw InsufficientSamples("Monte Carlo needs at least two samples");

  if (const auto* s = std::get_if<Sampled>(&domain.kind())) {
    const auto n = static_cast<std::size_t>(s->n);
    const std::size_t pts = std::min(options.samples, domain.sample_count());
    if (pts < 2) throw InsufficientSamples("sampled domain has fewer than two points");
    std::vector<Complex> sum(count, Complex(0));
    std::vector<double> sum_sq(count, 0.0);
    std::vector<Complex> vals(count);
    for (std::size_t i = 0; i < pts; ++i) {
      integrand(std::span<const Complex>(s->points.data() + i * n, n), vals);
      for (std::size_t k = 0; k < count; ++k) {
        sum[k] += vals[k];
        sum_sq[k] += std::norm(vals[k]);
      }
    }
    return finish(sum, sum_sq, pts, 1.0, 0.0, s->volume);
  }

  const auto radii = domain.bounding_radii();
  double box = 1.0;
  for (double r : radii) box *= std::numbers::pi * r * r;

  const std::size_t blocks = (options.samples + kBlock - 1) / kBlock;
  std::vector<BlockSums> results(blocks);
  auto work = [&](std::size_t b) {
    const std::size_t target = std::min(kBlock, options.samples - b * kBlock);
    results[b] = run_block(domain, radii, count, integrand, options.seed, b, target);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(blocks)));
  if (jobs == 1) {
    for (std::size_t b = 0; b < blocks; ++b) work(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t b = t; b < blocks; b += jobs) work(b);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<Complex> sum(count, Complex(0));
  std::vector<double> sum_sq(count, 0.0);
  std::size_t accepted = 0;
  std::size_t proposed = 0;
  for (const auto& r : results) {
    for (std::size_t k = 0; k < count; ++k) {
      sum[k] += r.sum[k];
      sum_sq[k] += r.sum_sq[k];
    }
    accepted += r.accepted;
    proposed += r.proposed;
  }
  // Accepted points are i.i.d. uniform on the domain and independent of the
  // trial count; (N-1)/(M-1) is the unbiased acceptance estimate for
  // sampling until N acceptances.
  const double nacc = static_cast<double>(accepted);
  const double p = (nacc - 1.0) / (static_cast<double>(proposed) - 1.0);
  const double p_var = p * p * (1.0 - p) / nacc;
  return finish(sum, sum_sq, accepted, p, p_var, box);
}

template <ScalarType S>
McEstimate mc_inner_product(const DomainSpec& domain, const HoloPoly<S>& p, const HoloPoly<S>& q,
                            const McOptions& options) {
  if (p.num_vars() != domain.dim() || q.num_vars() != domain.dim())
    throw DimensionMismatch("mc_inner_product: polynomial and domain dimensions differ");
  const auto pf = [&] {
    if constexpr (ScalarTraits<S>::exact) return to_float(p);
    else return p;
  }();
  const auto qf = [&] {
    if constexpr (ScalarTraits<S>::exact) return to_float(q);
    else return q;
  }();
  Integrand f = [&](std::span<const Complex> z, std::span<Complex> out) {
    out[0] = pf.evaluate_complex(z) * std::conj(qf.evaluate_complex(z));
  };
  return mc_integrate(domain, 1, f, options).front();
}

GramMatrix<Complex> mc_gram(const DomainSpec& domain, int d, const McOptions& options) {
  const int n = domain.dim();
  MonomialBasis basis(n, d);
  const std::size_t sz = basis.size();
  Integrand f = [&](std::span<const Complex> z, std::span<Complex> out) {
    std::vector<Complex> mono(sz);
    for (std::size_t i = 0; i < sz; ++i) mono[i] = monomial_value(basis[i], z);
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) out[i * sz + j] = mono[i] * std::conj(mono[j]);
  };
  const auto est = mc_integrate(domain, sz * sz, f, options);
  GramMatrix<Complex> g;
  g.domain = domain.id();
  g.n = n;
  g.d = d;
  g.scale = domain.scale();
  g.provenance = GramProvenance::MonteCarlo;
  g.diagonal = false;
  for (const auto& e : est) {
    g.entries.push_back(e.value / g.scale);
    g.std_errors.push_back(e.std_error / g.scale);
  }
  return g;
}

bool circled_spot_check(const DomainSpec& domain, const McOptions& options) {
  const int n = domain.dim();
  std::vector<MultiIndex> monos = enumerate_basis(n, 1);
  for (auto& a : enumerate_basis(n, 2)) monos.push_back(a);
  Integrand f = [&](std::span<const Complex> z, std::span<Complex> out) {
    for (std::size_t k = 0; k < monos.size(); ++k) out[k] = monomial_value(monos[k], z);
  };
  for (const auto& e : mc_integrate(domain, monos.size(), f, options))
    if (std::abs(e.value) > 3.0 * e.std_error) return false;
  return true;
}

template GramMatrix<GaussRational> gram(const DomainSpec&, int, const GramOptions&);
template GramMatrix<Complex> gram(const DomainSpec&, int, const GramOptions&);
template BihomPoly<GaussRational> phi_squared_norm(const DomainSpec&, int, const GramOptions&);
template BihomPoly<Complex> phi_squared_norm(const DomainSpec&, int, const GramOptions&);
template std::vector<GaussRational> invert(std::span<const GaussRational>, std::size_t);
template std::vector<Complex> invert(std::span<const Complex>, std::size_t);
template McEstimate mc_inner_product(const DomainSpec&, const HoloPoly<GaussRational>&,
                                     const HoloPoly<GaussRational>&, const McOptions&);
template McEstimate mc_inner_product(const DomainSpec&, const HoloPoly<Complex>&, const HoloPoly<Complex>&,
                                     const McOptions&);

}  // namespace hermsos
