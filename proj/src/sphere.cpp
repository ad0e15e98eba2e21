#include <algorithm>
#include <cmath>
#include <numbers>

#include "hermsos/errors.hpp"
#include "hermsos/stabilize.hpp"

namespace hermsos {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::size_t index, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % static_cast<std::size_t>(base));
    index /= static_cast<std::size_t>(base);
    f *= inv;
  }
  return r;
}

/// Halton point i mapped to the sphere through Box-Muller pairs.
std::vector<Complex> halton_sphere_point(std::size_t i, int n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  double norm2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double u = radical_inverse(i, kPrimes[2 * j]);
    const double v = radical_inverse(i, kPrimes[2 * j + 1]);
    const double r = std::sqrt(-2.0 * std::log(std::max(u, 1e-300)));
    z[static_cast<std::size_t>(j)] = std::polar(r, 2.0 * std::numbers::pi * v);
    norm2 += r * r;
  }
  const double inv = norm2 > 0.0 ? 1.0 / std::sqrt(norm2) : 1.0;
  for (auto& c : z) c *= inv;
  return z;
}

void normalize(std::vector<Complex>& z) {
  double s = 0.0;
  for (const auto& c : z) s += std::norm(c);
  const double inv = 1.0 / std::sqrt(s);
  for (auto& c : z) c *= inv;
}

/// 2 df/d(conj z_j): the real gradient written as a complex vector.
std::vector<Complex> gradient(const BihomPoly<Complex>& f, const std::vector<Complex>& z) {
  const std::size_t n = z.size();
  std::vector<Complex> zbar(n);
  for (std::size_t j = 0; j < n; ++j) zbar[j] = std::conj(z[j]);
  std::vector<Complex> g(n, Complex(0));
  for (const auto& [key, c] : f.terms()) {
    const Complex head = c * monomial_value(key.first, std::span<const Complex>(z));
    for (std::size_t j = 0; j < n; ++j) {
      const int e = key.second[j];
      if (e == 0) continue;
      Complex tail(static_cast<double>(e));
      for (std::size_t k = 0; k < n; ++k)
        for (int r = 0; r < key.second[k] - (k == j ? 1 : 0); ++r) tail *= zbar[k];
      g[j] += 2.0 * head * tail;
    }
  }
  return g;
}

double value(const BihomPoly<Complex>& f, const std::vector<Complex>& z) {
  return f.evaluate_complex(std::span<const Complex>(z)).real();
}

}  // namespace

SphereMinEstimate check_positive_on_sphere(const BihomPoly<Complex>& f, std::size_t samples,
                                           std::size_t refinements) {
  if (f.is_zero()) throw ZeroPolynomial("check_positive_on_sphere: f is identically zero");
  const int n = f.num_vars();
  if (2 * n > static_cast<int>(std::size(kPrimes)))
    throw DimensionMismatch("check_positive_on_sphere: at most 8 variables supported");
  samples = std::max<std::size_t>(samples, 1);

  struct Start {
    double value;
    std::vector<Complex> z;
  };
  std::vector<Start> pool;
  for (int j = 0; j < n; ++j) {
    std::vector<Complex> e(static_cast<std::size_t>(n), Complex(0));
    e[static_cast<std::size_t>(j)] = 1.0;
    pool.push_back({value(f, e), std::move(e)});
  }
  for (std::size_t i = 1; i <= samples; ++i) {
    auto z = halton_sphere_point(i, n);
    pool.push_back({value(f, z), std::move(z)});
  }
  const std::size_t starts = std::min<std::size_t>(16, pool.size());
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(starts), pool.end(),
                    [](const Start& a, const Start& b) { return a.value < b.value; });

  SphereMinEstimate best;
  best.minimum = pool.front().value;
  best.argmin = pool.front().z;
  best.samples = samples;
  best.refinements = refinements;

  for (std::size_t s = 0; s < starts; ++s) {
    auto z = pool[s].z;
    double fz = pool[s].value;
    double eta = 0.1;
    for (std::size_t it = 0; it < refinements; ++it) {
      const auto g = gradient(f, z);
      double gnorm = 0.0;
      for (const auto& c : g) gnorm += std::norm(c);
      if (gnorm < 1e-28) break;
      bool improved = false;
      for (int attempt = 0; attempt < 40; ++attempt) {
        std::vector<Complex> trial(z);
        for (std::size_t j = 0; j < trial.size(); ++j) trial[j] -= eta * g[j];
        normalize(trial);
        const double ft = value(f, trial);
        if (ft < fz) {
          z = std::move(trial);
          fz = ft;
          eta *= 1.5;
          improved = true;
          break;
        }
        eta *= 0.5;
      }
      if (!improved) break;
    }
    if (fz < best.minimum) {
      best.minimum = fz;
      best.argmin = z;
    }
  }
  return best;
}

SphereMinEstimate check_positive_on_sphere(const BihomPoly<GaussRational>& f, std::size_t samples,
                                           std::size_t refinements) {
  return check_positive_on_sphere(to_float(f), samples, refinements);
}

}  // namespace hermsos
