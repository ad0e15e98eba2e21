#include "hermsos/poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hermsos/errors.hpp"

namespace hermsos {

namespace {

using std::conj;

void check_same_vars(int a, int b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": variable counts " + std::to_string(a) + " and " +
                            std::to_string(b) + " differ");
}

template <class Map, class Key, class S>
void accumulate(Map& terms, Key&& key, const S& c) {
  if (is_exact_zero(c)) return;
  auto [it, inserted] = terms.try_emplace(std::forward<Key>(key), c);
  if (!inserted) {
    it->second += c;
    if (is_exact_zero(it->second)) terms.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------- HoloPoly

template <ScalarType S>
HoloPoly<S>::HoloPoly(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw InputError("polynomial needs at least one variable");
  if (d < 0) throw InputError("polynomial degree must be non-negative");
}

template <ScalarType S>
HoloPoly<S>::HoloPoly(int n, int d, const Terms& terms) : HoloPoly(n, d) {
  for (const auto& [alpha, c] : terms) add_term(alpha, c);
}

template <ScalarType S>
HoloPoly<S> HoloPoly<S>::monomial(const MultiIndex& alpha, const S& c) {
  HoloPoly p(static_cast<int>(alpha.size()), alpha.degree());
  p.add_term(alpha, c);
  return p;
}

template <ScalarType S>
S HoloPoly<S>::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? S(0) : it->second;
}

template <ScalarType S>
void HoloPoly<S>::add_term(const MultiIndex& alpha, const S& c) {
  if (static_cast<int>(alpha.size()) != n_) throw DimensionMismatch("monomial has wrong number of variables");
  if (alpha.degree() != d_)
    throw DimensionMismatch("monomial of degree " + std::to_string(alpha.degree()) +
                            " in a polynomial of degree " + std::to_string(d_));
  accumulate(terms_, alpha, c);
}

template <ScalarType S>
S HoloPoly<S>::evaluate(std::span<const S> z) const {
  if (static_cast<int>(z.size()) != n_) throw DimensionMismatch("evaluation point has wrong length");
  S acc(0);
  for (const auto& [alpha, c] : terms_) acc += c * monomial_value(alpha, z);
  return acc;
}

template <ScalarType S>
Complex HoloPoly<S>::evaluate_complex(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != n_) throw DimensionMismatch("evaluation point has wrong length");
  Complex acc(0);
  for (const auto& [alpha, c] : terms_) acc += to_complex(c) * monomial_value(alpha, z);
  return acc;
}

template <ScalarType S>
HoloPoly<S>& HoloPoly<S>::operator+=(const HoloPoly& other) {
  check_same_vars(n_, other.n_, "HoloPoly +=");
  if (other.d_ != d_) throw DimensionMismatch("HoloPoly +=: degrees differ");
  for (const auto& [alpha, c] : other.terms_) accumulate(terms_, alpha, c);
  return *this;
}

template <ScalarType S>
HoloPoly<S> HoloPoly<S>::scaled(const S& c) const {
  HoloPoly out(n_, d_);
  for (const auto& [alpha, v] : terms_) out.add_term(alpha, v * c);
  return out;
}

template <ScalarType S>
HoloPoly<S> HoloPoly<S>::operator*(const HoloPoly& other) const {
  check_same_vars(n_, other.n_, "HoloPoly *");
  HoloPoly out(n_, d_ + other.d_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) accumulate(out.terms_, a + b, ca * cb);
  return out;
}

// --------------------------------------------------------------- BihomPoly

template <ScalarType S>
BihomPoly<S>::BihomPoly(int n, int m) : n_(n), m_(m) {
  if (n < 1) throw InputError("polynomial needs at least one variable");
  if (m < 0) throw InputError("bidegree must be non-negative");
}

template <ScalarType S>
BihomPoly<S>::BihomPoly(int n, int m, const Terms& terms) : BihomPoly(n, m) {
  for (const auto& [key, c] : terms) add_term(key.first, key.second, c);
}

template <ScalarType S>
BihomPoly<S> BihomPoly<S>::constant(int n, const S& c) {
  BihomPoly f(n, 0);
  f.add_term(MultiIndex::zero(static_cast<std::size_t>(n)), MultiIndex::zero(static_cast<std::size_t>(n)), c);
  return f;
}

template <ScalarType S>
S BihomPoly<S>::coeff(const MultiIndex& mu, const MultiIndex& nu) const {
  auto it = terms_.find(Key(mu, nu));
  return it == terms_.end() ? S(0) : it->second;
}

template <ScalarType S>
void BihomPoly<S>::add_term(const MultiIndex& mu, const MultiIndex& nu, const S& c) {
  if (static_cast<int>(mu.size()) != n_ || static_cast<int>(nu.size()) != n_)
    throw DimensionMismatch("term has wrong number of variables");
  if (mu.degree() != m_ || nu.degree() != m_)
    throw DimensionMismatch("term (" + std::to_string(mu.degree()) + "," + std::to_string(nu.degree()) +
                            ") in a polynomial of bidegree " + std::to_string(m_));
  accumulate(terms_, Key(mu, nu), c);
}

template <ScalarType S>
bool BihomPoly<S>::is_hermitian(double rel_tol) const {
  double tol = 0.0;
  if constexpr (!ScalarTraits<S>::exact) tol = rel_tol * max_abs_coeff();
  for (const auto& [key, c] : terms_) {
    S mirrored = coeff(key.second, key.first);
    if constexpr (ScalarTraits<S>::exact) {
      if (!(c == conj(mirrored))) return false;
    } else {
      if (std::abs(c - conj(mirrored)) > tol) return false;
    }
  }
  return true;
}

template <ScalarType S>
S BihomPoly<S>::evaluate(std::span<const S> z) const {
  if (static_cast<int>(z.size()) != n_)
    throw DimensionMismatch("evaluation point has length " + std::to_string(z.size()) + ", polynomial has " +
                            std::to_string(n_) + " variables");
  std::vector<S> zbar(z.begin(), z.end());
  for (auto& v : zbar) v = conj(v);
  S acc(0);
  for (const auto& [key, c] : terms_)
    acc += c * monomial_value(key.first, z) * monomial_value(key.second, std::span<const S>(zbar));
  return acc;
}

template <ScalarType S>
Complex BihomPoly<S>::evaluate_complex(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != n_) throw DimensionMismatch("evaluation point has wrong length");
  std::vector<Complex> zbar(z.begin(), z.end());
  for (auto& v : zbar) v = std::conj(v);
  Complex acc(0);
  for (const auto& [key, c] : terms_)
    acc += to_complex(c) * monomial_value(key.first, z) *
           monomial_value(key.second, std::span<const Complex>(zbar));
  return acc;
}

template <ScalarType S>
double BihomPoly<S>::evaluate_abs(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != n_) throw DimensionMismatch("evaluation point has wrong length");
  std::vector<double> r(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) r[j] = std::abs(z[j]);
  double acc = 0.0;
  for (const auto& [key, c] : terms_)
    acc += magnitude(c) * monomial_value(key.first, std::span<const double>(r)) *
           monomial_value(key.second, std::span<const double>(r));
  return acc;
}

template <ScalarType S>
double BihomPoly<S>::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [key, c] : terms_) m = std::max(m, magnitude(c));
  return m;
}

template <ScalarType S>
BihomPoly<S>& BihomPoly<S>::operator+=(const BihomPoly& other) {
  check_same_vars(n_, other.n_, "BihomPoly +=");
  if (other.m_ != m_) throw DimensionMismatch("BihomPoly +=: bidegrees differ");
  for (const auto& [key, c] : other.terms_) accumulate(terms_, key, c);
  return *this;
}

template <ScalarType S>
BihomPoly<S> BihomPoly<S>::scaled(const S& c) const {
  BihomPoly out(n_, m_);
  for (const auto& [key, v] : terms_) out.add_term(key.first, key.second, v * c);
  return out;
}

// ---------------------------------------------------------- free functions

template <ScalarType S>
RealOf<S> eval(const BihomPoly<S>& f, std::span<const S> z) {
  return real_part(f.evaluate(z));
}

template <ScalarType S>
BihomPoly<S> mul(const BihomPoly<S>& f, const BihomPoly<S>& g) {
  check_same_vars(f.num_vars(), g.num_vars(), "mul");
  typename BihomPoly<S>::Terms out;
  for (const auto& [kf, cf] : f.terms())
    for (const auto& [kg, cg] : g.terms())
      accumulate(out, typename BihomPoly<S>::Key(kf.first + kg.first, kf.second + kg.second), cf * cg);
  BihomPoly<S> result(f.num_vars(), f.bidegree() + g.bidegree());
  for (const auto& [k, c] : out) result.add_term(k.first, k.second, c);
  return result;
}

template <ScalarType S>
BihomPoly<S> norm_power(int n, int d) {
  BihomPoly<S> out(n, d);
  Rational dfact = factorial(static_cast<unsigned>(d));
  for (const auto& alpha : enumerate_basis(n, d))
    out.add_term(alpha, alpha, scalar_from<S>(GaussRational(Rational(dfact / alpha.factorial()))));
  return out;
}

template <ScalarType S>
BihomPoly<S> weighted_squared_norm(std::span<const HoloPoly<S>> components, std::span<const RealOf<S>> weights) {
  if (components.empty()) throw InputError("squared norm needs at least one component");
  if (weights.size() != components.size()) throw DimensionMismatch("one weight per component required");
  const int n = components.front().num_vars();
  const int d = components.front().degree();
  typename BihomPoly<S>::Terms out;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& a = components[k];
    if (a.num_vars() != n) throw DimensionMismatch("components have mixed variable counts");
    if (a.degree() != d) throw DimensionMismatch("components have mixed degrees");
    S w = scalar_from_real<S>(weights[k]);
    for (const auto& [mu, cm] : a.terms())
      for (const auto& [nu, cn] : a.terms())
        accumulate(out, typename BihomPoly<S>::Key(mu, nu), w * cm * conj(cn));
  }
  BihomPoly<S> result(n, d);
  for (const auto& [k, c] : out) result.add_term(k.first, k.second, c);
  return result;
}

template <ScalarType S>
BihomPoly<S> from_squared_norm(std::span<const HoloPoly<S>> components) {
  std::vector<RealOf<S>> ones(components.size(), RealOf<S>(1));
  return weighted_squared_norm(components, std::span<const RealOf<S>>(ones));
}

namespace {

template <ScalarType S>
std::vector<HoloPoly<S>> linear_forms(int n, std::span<const S> a) {
  if (a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw DimensionMismatch("substitution matrix must be n x n");
  std::vector<HoloPoly<S>> forms;
  for (int j = 0; j < n; ++j) {
    HoloPoly<S> l(n, 1);
    for (int k = 0; k < n; ++k)
      l.add_term(MultiIndex::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(k)),
                 a[static_cast<std::size_t>(j * n + k)]);
    forms.push_back(std::move(l));
  }
  return forms;
}

template <ScalarType S>
HoloPoly<S> power_product(const MultiIndex& alpha, const std::vector<HoloPoly<S>>& forms) {
  const int n = static_cast<int>(alpha.size());
  HoloPoly<S> acc = HoloPoly<S>::monomial(MultiIndex::zero(alpha.size()));
  for (int j = 0; j < n; ++j)
    for (int e = 0; e < alpha[static_cast<std::size_t>(j)]; ++e) acc = acc * forms[static_cast<std::size_t>(j)];
  return acc;
}

}  // namespace

template <ScalarType S>
HoloPoly<S> substitute(const HoloPoly<S>& p, std::span<const S> a) {
  auto forms = linear_forms(p.num_vars(), a);
  HoloPoly<S> out(p.num_vars(), p.degree());
  for (const auto& [alpha, c] : p.terms()) out += power_product(alpha, forms).scaled(c);
  return out;
}

template <ScalarType S>
BihomPoly<S> substitute(const BihomPoly<S>& f, std::span<const S> a) {
  auto forms = linear_forms(f.num_vars(), a);
  std::map<MultiIndex, HoloPoly<S>> cache;
  auto expanded = [&](const MultiIndex& alpha) -> const HoloPoly<S>& {
    auto it = cache.find(alpha);
    if (it == cache.end()) it = cache.emplace(alpha, power_product(alpha, forms)).first;
    return it->second;
  };
  typename BihomPoly<S>::Terms out;
  for (const auto& [key, c] : f.terms()) {
    const auto& pm = expanded(key.first);
    const auto& pn = expanded(key.second);
    for (const auto& [g, cg] : pm.terms())
      for (const auto& [h, ch] : pn.terms()) accumulate(out, typename BihomPoly<S>::Key(g, h), c * cg * conj(ch));
  }
  BihomPoly<S> result(f.num_vars(), f.bidegree());
  for (const auto& [k, c] : out) result.add_term(k.first, k.second, c);
  return result;
}

HoloPoly<Complex> to_float(const HoloPoly<GaussRational>& p) {
  HoloPoly<Complex> out(p.num_vars(), p.degree());
  for (const auto& [alpha, c] : p.terms()) out.add_term(alpha, c.to_complex());
  return out;
}

BihomPoly<Complex> to_float(const BihomPoly<GaussRational>& f) {
  BihomPoly<Complex> out(f.num_vars(), f.bidegree());
  for (const auto& [key, c] : f.terms()) out.add_term(key.first, key.second, c.to_complex());
  return out;
}

#define HERMSOS_INSTANTIATE(S)                                                                          \
  template class HoloPoly<S>;                                                                           \
  template class BihomPoly<S>;                                                                          \
  template RealOf<S> eval(const BihomPoly<S>&, std::span<const S>);                                     \
  template BihomPoly<S> mul(const BihomPoly<S>&, const BihomPoly<S>&);                                  \
  template BihomPoly<S> norm_power<S>(int, int);                                                        \
  template BihomPoly<S> from_squared_norm(std::span<const HoloPoly<S>>);                                \
  template BihomPoly<S> weighted_squared_norm(std::span<const HoloPoly<S>>, std::span<const RealOf<S>>); \
  template HoloPoly<S> substitute(const HoloPoly<S>&, std::span<const S>);                              \
  template BihomPoly<S> substitute(const BihomPoly<S>&, std::span<const S>);

HERMSOS_INSTANTIATE(GaussRational)
HERMSOS_INSTANTIATE(Complex)

#undef HERMSOS_INSTANTIATE

}  // namespace hermsos
