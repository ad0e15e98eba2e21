#include "hermsos/ldl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "hermsos/errors.hpp"

namespace hermsos {

using std::conj;

template <ScalarType S>
std::size_t LdlFactorization<S>::rank() const {
  std::size_t r = 0;
  for (const auto& p : pivots)
    if (p > 0) ++r;
  return r;
}

namespace {

/// Working state: trailing Schur complement in `a`, computed columns of L.
template <ScalarType S>
class Factorizer {
 public:
  using Real = RealOf<S>;

  Factorizer(const HermMatrix<S>& m, const LdlOptions& options) : m_(m), n_(m.size()), a_(m.entries()) {
    perm_.resize(n_);
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
    lower_.assign(n_ * n_, S(0));
    for (std::size_t i = 0; i < n_; ++i) lower_[i * n_ + i] = S(1);
    if constexpr (!ScalarTraits<S>::exact) {
      double max_diag = 0.0;
      for (std::size_t i = 0; i < n_; ++i) max_diag = std::max(max_diag, a_[i * n_ + i].real());
      tol_ = options.zero_tolerance * (max_diag > 0.0 ? max_diag : m.max_abs());
    }
  }

  LdlResult<S> run() {
    std::vector<Real> pivots;
    std::vector<std::size_t> skipped;
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < n_; ++i)
        if (diag(i) > diag(p)) p = i;
      swap(k, p);
      const Real pivot = diag(k);
      if (is_negative(pivot)) return witness_single(k);
      if (is_zero(pivot)) {
        if (auto w = zero_block_witness(k)) return *std::move(w);
        for (std::size_t r = k; r < n_; ++r) {
          pivots.push_back(Real(0));
          skipped.push_back(r);
        }
        break;
      }
      pivots.push_back(pivot);
      eliminate(k);
    }
    LdlFactorization<S> out;
    out.size = n_;
    out.perm = perm_;
    out.lower = std::move(lower_);
    out.pivots = std::move(pivots);
    out.skipped = std::move(skipped);
    out.numeric = !ScalarTraits<S>::exact;
    return out;
  }

 private:
  S& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  Real diag(std::size_t i) const { return real_part(a_[i * n_ + i]); }

  bool is_negative(const Real& v) const {
    if constexpr (ScalarTraits<S>::exact) {
      return sgn(v) < 0;
    } else {
      return v < -tol_;
    }
  }
  bool is_zero(const Real& v) const {
    if constexpr (ScalarTraits<S>::exact) {
      return sgn(v) == 0;
    } else {
      return std::abs(v) <= tol_;
    }
  }
  bool offdiag_nonzero(const S& v) const {
    if constexpr (ScalarTraits<S>::exact) {
      return !v.is_zero();
    } else {
      return std::abs(v) > 2.0 * tol_;
    }
  }

  void swap(std::size_t k, std::size_t p) {
    if (k == p) return;
    for (std::size_t j = 0; j < n_; ++j) std::swap(at(k, j), at(p, j));
    for (std::size_t i = 0; i < n_; ++i) std::swap(at(i, k), at(i, p));
    std::swap(perm_[k], perm_[p]);
    for (std::size_t j = 0; j < k; ++j) std::swap(lower_[k * n_ + j], lower_[p * n_ + j]);
  }

  void eliminate(std::size_t k) {
    const S pivot = at(k, k);
    for (std::size_t i = k + 1; i < n_; ++i) lower_[i * n_ + k] = at(i, k) / pivot;
    for (std::size_t i = k + 1; i < n_; ++i) {
      const S& lik = lower_[i * n_ + k];
      if (is_exact_zero(lik)) continue;
      for (std::size_t j = k + 1; j < n_; ++j) {
        const S& ajk = at(j, k);
        if (is_exact_zero(ajk)) continue;
        at(i, j) -= lik * conj(ajk);
      }
    }
  }

  /// Maps a direction y in the trailing block to v = P* L^{-*} y.
  NegativityWitness<S> witness_from(std::vector<S> y, std::size_t k) {
    for (std::size_t i = k; i-- > 0;) {
      S acc(0);
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!is_exact_zero(y[j])) acc += conj(lower_[j * n_ + i]) * y[j];
      y[i] = -acc;
    }
    std::vector<S> v(n_, S(0));
    for (std::size_t i = 0; i < n_; ++i) v[perm_[i]] = y[i];
    NegativityWitness<S> w;
    w.value = quadratic_form(m_, std::span<const S>(v));
    w.vector = std::move(v);
    w.numeric = !ScalarTraits<S>::exact;
    return w;
  }

  NegativityWitness<S> witness_single(std::size_t k) {
    std::vector<S> y(n_, S(0));
    y[k] = S(1);
    return witness_from(std::move(y), k);
  }

  /// The largest remaining diagonal is zero: either the trailing block
  /// vanishes or some 2x2 principal minor is indefinite.
  std::optional<NegativityWitness<S>> zero_block_witness(std::size_t k) {
    for (std::size_t i = k; i < n_; ++i) {
      if (is_negative(diag(i))) {
        std::vector<S> y(n_, S(0));
        y[i] = S(1);
        return witness_from(std::move(y), k);
      }
    }
    for (std::size_t i = k; i < n_; ++i)
      for (std::size_t j = k; j < n_; ++j) {
        if (i == j || !offdiag_nonzero(at(i, j))) continue;
        std::vector<S> y(n_, S(0));
        y[i] = S(1);
        if constexpr (ScalarTraits<S>::exact) {
          y[j] = -conj(at(i, j));
        } else {
          y[j] = -conj(at(i, j)) / std::abs(at(i, j));
        }
        return witness_from(std::move(y), k);
      }
    return std::nullopt;
  }

  const HermMatrix<S>& m_;
  std::size_t n_;
  std::vector<S> a_;
  std::vector<std::size_t> perm_;
  std::vector<S> lower_;
  double tol_ = 0.0;
};

}  // namespace

template <ScalarType S>
LdlResult<S> ldlt_psd(const HermMatrix<S>& m, const LdlOptions& options) {
  if (!m.is_hermitian()) throw NonHermitian("ldlt_psd: matrix is not Hermitian");
  return Factorizer<S>(m, options).run();
}

template <ScalarType S>
HermMatrix<S> reconstruct(const LdlFactorization<S>& f, int n, int d) {
  const std::size_t sz = f.size;
  std::vector<S> b(sz * sz, S(0));
  for (std::size_t k = 0; k < sz; ++k) {
    if (f.pivots[k] == 0) continue;
    const S dk = scalar_from_real<S>(f.pivots[k]);
    for (std::size_t i = k; i < sz; ++i) {
      const S& lik = f.l(i, k);
      if (is_exact_zero(lik)) continue;
      const S left = lik * dk;
      for (std::size_t j = k; j < sz; ++j) {
        const S& ljk = f.l(j, k);
        if (is_exact_zero(ljk)) continue;
        b[i * sz + j] += left * conj(ljk);
      }
    }
  }
  std::vector<S> out(sz * sz, S(0));
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j) out[f.perm[i] * sz + f.perm[j]] = b[i * sz + j];
  return HermMatrix<S>(n, d, std::move(out));
}

template struct LdlFactorization<GaussRational>;
template struct LdlFactorization<Complex>;
template LdlResult<GaussRational> ldlt_psd(const HermMatrix<GaussRational>&, const LdlOptions&);
template LdlResult<Complex> ldlt_psd(const HermMatrix<Complex>&, const LdlOptions&);
template HermMatrix<GaussRational> reconstruct(const LdlFactorization<GaussRational>&, int, int);
template HermMatrix<Complex> reconstruct(const LdlFactorization<Complex>&, int, int);

}  // namespace hermsos
