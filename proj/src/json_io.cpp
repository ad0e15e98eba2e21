#include "hermsos/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "hermsos/errors.hpp"

namespace hermsos::io {

namespace {

const json& field(const json& j, const char* name, const std::string& ctx) {
  if (!j.is_object()) throw InputError(ctx + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw InputError(ctx + ": missing field '" + name + "'");
  return *it;
}

int int_field(const json& j, const char* name, const std::string& ctx) {
  const auto& v = field(j, name, ctx);
  if (!v.is_number_integer()) throw InputError(ctx + ": field '" + name + "' must be an integer");
  return v.get<int>();
}

Rational rational_value(const json& v, const std::string& ctx) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw InputError(ctx + ": expected a rational string such as \"3/4\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(ctx + ": " + e.what());
  }
}

GaussRational gauss_value(const json& term, const std::string& ctx) {
  Rational re = rational_value(field(term, "re", ctx), ctx + ".re");
  Rational im(0);
  if (auto it = term.find("im"); it != term.end()) im = rational_value(*it, ctx + ".im");
  return {re, im};
}

MultiIndex index_value(const json& v, int n, const std::string& ctx) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw InputError(ctx + ": expected an array of " + std::to_string(n) + " exponents");
  std::vector<int> e;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<int>() < 0) throw InputError(ctx + ": exponents must be non-negative integers");
    e.push_back(x.get<int>());
  }
  return MultiIndex(std::move(e));
}

json index_json(const MultiIndex& a) { return json(std::vector<int>(a.exponents().begin(), a.exponents().end())); }

double parse_double(std::string_view s, const std::string& ctx) {
  std::string t(s);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0') throw InputError(ctx + ": malformed float '" + t + "'");
  return v;
}

/// "a", "bi", "a+bi" with decimal parts, parsed with strtod so that
/// 17-digit output round-trips bit-exactly.
Complex parse_complex_text(std::string_view s, const std::string& ctx) {
  if (s.empty()) throw InputError(ctx + ": empty number");
  if (s.back() != 'i') return {parse_double(s, ctx), 0.0};
  s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag_of = [&](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t, ctx);
  };
  if (split == std::string_view::npos) return {0.0, imag_of(s)};
  return {parse_double(s.substr(0, split), ctx), imag_of(s.substr(split))};
}

template <ScalarType S>
S scalar_from_text(const json& v, const std::string& ctx) {
  if (!v.is_string()) throw InputError(ctx + ": expected a string");
  if constexpr (ScalarTraits<S>::exact) {
    try {
      return parse_gauss(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(ctx + ": " + e.what());
    }
  } else {
    return parse_complex_text(v.get<std::string>(), ctx);
  }
}

template <ScalarType S>
std::string real_text(const RealOf<S>& r) {
  if constexpr (ScalarTraits<S>::exact) {
    return format_rational(r);
  } else {
    return format_double(r);
  }
}

template <ScalarType S>
RealOf<S> real_from_text(const json& v, const std::string& ctx) {
  if constexpr (ScalarTraits<S>::exact) {
    return rational_value(v, ctx);
  } else {
    if (v.is_number()) return v.get<double>();
    if (!v.is_string()) throw InputError(ctx + ": expected a number string");
    return parse_double(v.get<std::string>(), ctx);
  }
}

json complex_pair(const Complex& c) { return json::array({c.real(), c.imag()}); }

}  // namespace

std::string scalar_text(const GaussRational& s) { return format_gauss(s); }

std::string scalar_text(const Complex& s) {
  if (s.imag() == 0.0) return format_double(s.real());
  std::string im = format_double(s.imag());
  if (im.front() != '-') im = "+" + im;
  return format_double(s.real()) + im + "i";
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

// ------------------------------------------------------------ polynomials

BihomPoly<GaussRational> poly_from_json(const json& j) {
  const std::string ctx = "polynomial";
  const int n = int_field(j, "n", ctx);
  const int m = int_field(j, "m", ctx);
  if (n < 1) throw InputError(ctx + ": field 'n' must be positive");
  if (m < 0) throw InputError(ctx + ": field 'm' must be non-negative");
  const auto& terms = field(j, "terms", ctx);
  if (!terms.is_array()) throw InputError(ctx + ": field 'terms' must be an array");

  std::map<std::pair<MultiIndex, MultiIndex>, GaussRational> given;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tctx = "terms[" + std::to_string(i) + "]";
    const auto& t = terms[i];
    MultiIndex mu = index_value(field(t, "mu", tctx), n, tctx + ".mu");
    MultiIndex nu = index_value(field(t, "nu", tctx), n, tctx + ".nu");
    if (mu.degree() != m || nu.degree() != m)
      throw InputError(tctx + ": exponents must have degree m=" + std::to_string(m));
    GaussRational c = gauss_value(t, tctx);
    if (mu == nu && !c.is_real()) throw InputError(tctx + ": diagonal coefficient must be real");
    if (!given.emplace(std::make_pair(mu, nu), c).second) throw InputError(tctx + ": duplicate term");
  }
  BihomPoly<GaussRational> f(n, m);
  for (const auto& [key, c] : given) {
    const auto& [mu, nu] = key;
    if (mu == nu) {
      f.add_term(mu, nu, c);
      continue;
    }
    auto partner = given.find(std::make_pair(nu, mu));
    if (partner != given.end()) {
      if (!(partner->second == conj(c)))
        throw InputError(ctx + ": conjugate terms (mu,nu) and (nu,mu) have inconsistent coefficients");
      f.add_term(mu, nu, c);
    } else {
      f.add_term(mu, nu, c);
      f.add_term(nu, mu, conj(c));
    }
  }
  return f;
}

namespace {

template <ScalarType S>
json poly_json_impl(const BihomPoly<S>& f) {
  json terms = json::array();
  for (const auto& [key, c] : f.terms()) {
    GaussRational q;
    std::string re, im;
    if constexpr (ScalarTraits<S>::exact) {
      re = format_rational(c.re());
      im = format_rational(c.im());
    } else {
      re = format_double(c.real());
      im = format_double(c.imag());
    }
    terms.push_back({{"mu", index_json(key.first)}, {"nu", index_json(key.second)}, {"re", re}, {"im", im}});
  }
  return {{"n", f.num_vars()}, {"m", f.bidegree()}, {"terms", terms}};
}

template <ScalarType S>
json holo_json_impl(const HoloPoly<S>& p) {
  json terms = json::array();
  for (const auto& [alpha, c] : p.terms()) {
    std::string re, im;
    if constexpr (ScalarTraits<S>::exact) {
      re = format_rational(c.re());
      im = format_rational(c.im());
    } else {
      re = format_double(c.real());
      im = format_double(c.imag());
    }
    terms.push_back({{"alpha", index_json(alpha)}, {"re", re}, {"im", im}});
  }
  return {{"n", p.num_vars()}, {"d", p.degree()}, {"terms", terms}};
}

}  // namespace

json poly_to_json(const BihomPoly<GaussRational>& f) { return poly_json_impl(f); }
json poly_to_json(const BihomPoly<Complex>& f) { return poly_json_impl(f); }

HoloPoly<GaussRational> holo_from_json(const json& j) {
  const std::string ctx = "holomorphic polynomial";
  const int n = int_field(j, "n", ctx);
  const int d = int_field(j, "d", ctx);
  if (n < 1 || d < 0) throw InputError(ctx + ": need n >= 1 and d >= 0");
  const auto& terms = field(j, "terms", ctx);
  if (!terms.is_array()) throw InputError(ctx + ": field 'terms' must be an array");
  HoloPoly<GaussRational> p(n, d);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tctx = "terms[" + std::to_string(i) + "]";
    MultiIndex alpha = index_value(field(terms[i], "alpha", tctx), n, tctx + ".alpha");
    if (alpha.degree() != d) throw InputError(tctx + ": exponent must have degree d=" + std::to_string(d));
    p.add_term(alpha, gauss_value(terms[i], tctx));
  }
  return p;
}

json holo_to_json(const HoloPoly<GaussRational>& p) { return holo_json_impl(p); }
json holo_to_json(const HoloPoly<Complex>& p) { return holo_json_impl(p); }

// ---------------------------------------------------------------- domains

std::vector<Complex> load_points(const std::filesystem::path& path, int& n) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open points file '" + path.string() + "'");
  std::vector<Complex> pts;
  std::string line;
  int width = -1;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (auto& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ls(line);
    std::vector<double> v;
    double x;
    while (ls >> x) v.push_back(x);
    if (!ls.eof()) throw InputError(path.string() + ":" + std::to_string(lineno) + ": malformed number");
    if (v.empty()) continue;
    if (v.size() % 2 != 0) throw InputError(path.string() + ":" + std::to_string(lineno) + ": need 2n values");
    if (width < 0) width = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != width)
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": inconsistent point width");
    const std::size_t k = v.size() / 2;
    for (std::size_t j = 0; j < k; ++j) pts.emplace_back(v[j], v[k + j]);
  }
  if (width < 0) throw InputError("points file '" + path.string() + "' is empty");
  n = width / 2;
  return pts;
}

DomainSpec domain_from_json(const json& j, const std::filesystem::path& base_dir) {
  const std::string ctx = "domain";
  const auto& kind_v = field(j, "kind", ctx);
  if (!kind_v.is_string()) throw InputError(ctx + ": field 'kind' must be a string");
  const std::string kind = kind_v.get<std::string>();
  if (kind == "ball") return DomainSpec::ball(int_field(j, "n", ctx));
  if (kind == "polydisc") return DomainSpec::polydisc(int_field(j, "n", ctx));
  if (kind == "egg") {
    if (auto it = j.find("n"); it != j.end() && *it != 2) throw InputError(ctx + ": egg domains have n = 2");
    return DomainSpec::egg(int_field(j, "p", ctx));
  }
  if (kind == "linear-ball") {
    const auto& a = field(j, "A", ctx);
    if (!a.is_array() || a.empty()) throw InputError(ctx + ": field 'A' must be a square array of rational strings");
    const auto n = a.size();
    std::vector<GaussRational> entries;
    for (std::size_t r = 0; r < n; ++r) {
      if (!a[r].is_array() || a[r].size() != n) throw InputError(ctx + ": field 'A' must be square");
      for (std::size_t c = 0; c < n; ++c) {
        const std::string ectx = ctx + ".A[" + std::to_string(r) + "][" + std::to_string(c) + "]";
        if (a[r][c].is_number_integer()) {
          entries.emplace_back(Rational(a[r][c].get<long>()));
        } else {
          entries.push_back(scalar_from_text<GaussRational>(a[r][c], ectx));
        }
      }
    }
    return DomainSpec::linear_ball(static_cast<int>(n), std::move(entries));
  }
  if (kind == "sampled") {
    const auto& file = field(j, "points_file", ctx);
    if (!file.is_string()) throw InputError(ctx + ": field 'points_file' must be a string");
    const auto& vol = field(j, "volume", ctx);
    if (!vol.is_number()) throw InputError(ctx + ": field 'volume' must be a number");
    std::filesystem::path p = file.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    int n = 0;
    auto pts = load_points(p, n);
    if (auto it = j.find("n"); it != j.end() && *it != n)
      throw InputError(ctx + ": field 'n' disagrees with the points file width");
    return DomainSpec::sampled(n, std::move(pts), vol.get<double>());
  }
  throw InputError(ctx + ": unknown kind '" + kind + "' (expected ball, polydisc, egg, linear-ball, sampled)");
}

json domain_to_json(const DomainSpec& domain) {
  return std::visit(
      [&](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, UnitBall>) {
          return {{"kind", "ball"}, {"n", k.n}};
        } else if constexpr (std::is_same_v<K, Polydisc>) {
          return {{"kind", "polydisc"}, {"n", k.n}};
        } else if constexpr (std::is_same_v<K, Egg>) {
          return {{"kind", "egg"}, {"p", k.p}};
        } else if constexpr (std::is_same_v<K, LinearBall>) {
          json rows = json::array();
          const auto n = static_cast<std::size_t>(k.n);
          for (std::size_t r = 0; r < n; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < n; ++c) row.push_back(format_gauss(k.a[r * n + c]));
            rows.push_back(row);
          }
          return {{"kind", "linear-ball"}, {"A", rows}};
        } else {
          return {{"kind", "sampled"}, {"n", k.n}, {"volume", k.volume}, {"points", domain.sample_count()}};
        }
      },
      domain.kind());
}

// ----------------------------------------------------------- certificates

template <ScalarType S>
json certificate_to_json(const SosCertificate<S>& cert) {
  const auto& f = cert.factor;
  json lrows = json::array();
  for (std::size_t i = 0; i < f.size; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.size; ++j) row.push_back(scalar_text(f.l(i, j)));
    lrows.push_back(row);
  }
  json dvals = json::array();
  for (const auto& p : f.pivots) dvals.push_back(real_text<S>(p));
  MonomialBasis basis(cert.n, cert.degree);
  json h = json::array();
  for (const auto& comp : cert.components) {
    json dense = json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) dense.push_back(complex_pair(comp.coeff(basis[i])));
    h.push_back(dense);
  }
  return {{"n", cert.n},
          {"degree", cert.degree},
          {"domain", cert.label.domain},
          {"d", cert.label.d},
          {"tower", ScalarTraits<S>::name},
          {"perm", f.perm},
          {"L", lrows},
          {"D", dvals},
          {"skipped", f.skipped},
          {"rank", cert.rank},
          {"strict", cert.strict},
          {"numeric", cert.numeric},
          {"h", h}};
}

namespace {

template <ScalarType S>
SosCertificate<S> certificate_from_json_impl(const json& j) {
  const std::string ctx = "certificate";
  SosCertificate<S> cert;
  cert.n = int_field(j, "n", ctx);
  cert.degree = int_field(j, "degree", ctx);
  if (cert.n < 1 || cert.degree < 0) throw InputError(ctx + ": need n >= 1, degree >= 0");
  const auto& dom = field(j, "domain", ctx);
  if (!dom.is_string()) throw InputError(ctx + ": field 'domain' must be a string");
  cert.label.domain = dom.get<std::string>();
  cert.label.d = int_field(j, "d", ctx);
  if (auto it = j.find("tower"); it != j.end() && *it != ScalarTraits<S>::name)
    throw InputError(ctx + ": field 'tower' is '" + it->get<std::string>() + "', expected '" + ScalarTraits<S>::name +
                     "'");
  const std::size_t size = basis_size(cert.n, cert.degree);
  auto& f = cert.factor;
  f.size = size;
  const auto& perm = field(j, "perm", ctx);
  if (!perm.is_array() || perm.size() != size) throw InputError(ctx + ": field 'perm' must have basis-size entries");
  for (const auto& p : perm) {
    if (!p.is_number_unsigned()) throw InputError(ctx + ": field 'perm' must hold non-negative integers");
    f.perm.push_back(p.get<std::size_t>());
  }
  const auto& l = field(j, "L", ctx);
  if (!l.is_array() || l.size() != size) throw InputError(ctx + ": field 'L' must be basis-size square");
  for (std::size_t r = 0; r < size; ++r) {
    if (!l[r].is_array() || l[r].size() != size) throw InputError(ctx + ": field 'L' must be basis-size square");
    for (std::size_t c = 0; c < size; ++c)
      f.lower.push_back(scalar_from_text<S>(l[r][c], ctx + ".L[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
  }
  const auto& d = field(j, "D", ctx);
  if (!d.is_array() || d.size() != size) throw InputError(ctx + ": field 'D' must have basis-size entries");
  for (std::size_t k = 0; k < size; ++k) f.pivots.push_back(real_from_text<S>(d[k], ctx + ".D[" + std::to_string(k) + "]"));
  if (auto it = j.find("skipped"); it != j.end() && it->is_array())
    for (const auto& s : *it) f.skipped.push_back(s.get<std::size_t>());
  f.numeric = !ScalarTraits<S>::exact;
  const auto& rank = field(j, "rank", ctx);
  if (!rank.is_number_unsigned()) throw InputError(ctx + ": field 'rank' must be a non-negative integer");
  cert.rank = rank.get<std::size_t>();
  const auto& strict = field(j, "strict", ctx);
  if (!strict.is_boolean()) throw InputError(ctx + ": field 'strict' must be a boolean");
  cert.strict = strict.get<bool>();
  cert.numeric = j.value("numeric", !ScalarTraits<S>::exact);
  MonomialBasis basis(cert.n, cert.degree);
  const auto& h = field(j, "h", ctx);
  if (!h.is_array()) throw InputError(ctx + ": field 'h' must be an array");
  for (std::size_t k = 0; k < h.size(); ++k) {
    const std::string hctx = ctx + ".h[" + std::to_string(k) + "]";
    if (!h[k].is_array() || h[k].size() != size) throw InputError(hctx + ": expected basis-size coefficient pairs");
    HoloPoly<Complex> comp(cert.n, cert.degree);
    for (std::size_t i = 0; i < size; ++i) {
      const auto& pair = h[k][i];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        throw InputError(hctx + ": entries must be [re, im] number pairs");
      comp.add_term(basis[i], Complex(pair[0].get<double>(), pair[1].get<double>()));
    }
    cert.components.push_back(std::move(comp));
  }
  return cert;
}

}  // namespace

SosCertificate<GaussRational> exact_certificate_from_json(const json& j) {
  return certificate_from_json_impl<GaussRational>(j);
}

SosCertificate<Complex> float_certificate_from_json(const json& j) { return certificate_from_json_impl<Complex>(j); }

template <ScalarType S>
json witness_to_json(const NegativityWitness<S>& w) {
  json v = json::array();
  for (const auto& x : w.vector) v.push_back(scalar_text(x));
  return {{"vector", v}, {"value", real_text<S>(w.value)}, {"numeric", w.numeric}};
}

json sphere_to_json(const SphereMinEstimate& s) {
  json arg = json::array();
  for (const auto& c : s.argmin) arg.push_back(complex_pair(c));
  return {{"minimum", s.minimum}, {"argmin", arg}, {"samples", s.samples}, {"refinements", s.refinements}};
}

json mc_estimate_to_json(const McEstimate& e) {
  return {{"re", e.value.real()}, {"im", e.value.imag()}, {"std_error", e.std_error}};
}

namespace {

const char* verdict_name(TrialVerdict v) {
  switch (v) {
    case TrialVerdict::Certified:
      return "certified";
    case TrialVerdict::NotPsd:
      return "not_psd";
    case TrialVerdict::NotStrict:
      return "not_strict";
  }
  return "unknown";
}

const char* outcome_name(StabilizationOutcome o) {
  switch (o) {
    case StabilizationOutcome::Stabilized:
      return "stabilized";
    case StabilizationOutcome::CapExceeded:
      return "cap_exceeded";
    case StabilizationOutcome::HypothesisViolated:
      return "hypothesis_violated";
  }
  return "unknown";
}

}  // namespace

template <ScalarType S>
json stabilization_to_json(const StabilizationResult<S>& r, const json& input) {
  json trials = json::array();
  for (const auto& t : r.trials) {
    json tj = {{"d", t.d}, {"verdict", verdict_name(t.verdict)}};
    if (t.witness) tj["witness"] = witness_to_json(*t.witness);
    if (t.certificate) {
      tj["rank"] = t.certificate->rank;
      tj["verified"] = t.verified;
    }
    trials.push_back(tj);
  }
  json out = {{"mode", r.mode == SearchMode::Euclidean ? "euclidean" : "domain"},
              {"domain", r.domain},
              {"tower", ScalarTraits<S>::name},
              {"outcome", outcome_name(r.outcome)},
              {"d0", r.d0 ? json(*r.d0) : json(nullptr)},
              {"cap", r.cap},
              {"hypotheses_met", r.hypotheses_met},
              {"numeric_gram", r.numeric_gram},
              {"trials", trials},
              {"input", input}};
  const auto* cert = r.certificate();
  out["certificate"] = cert ? certificate_to_json(*cert) : json(nullptr);
  out["sphere"] = r.sphere ? sphere_to_json(*r.sphere) : json(nullptr);
  if (!r.disproof_point.empty()) {
    json pt = json::array();
    for (const auto& z : r.disproof_point) pt.push_back({format_rational(z.re()), format_rational(z.im())});
    out["disproof"] = {{"point", pt}, {"value", *r.disproof_value}};
  } else {
    out["disproof"] = nullptr;
  }
  return out;
}

template <ScalarType S>
json gram_to_json(const GramMatrix<S>& g) {
  MonomialBasis basis(g.n, g.d);
  json b = json::array();
  for (const auto& a : basis.elements()) b.push_back(index_json(a));
  const std::size_t sz = g.size();
  json rows = json::array();
  json errs = json::array();
  for (std::size_t i = 0; i < sz; ++i) {
    json row = json::array();
    json erow = json::array();
    for (std::size_t j = 0; j < sz; ++j) {
      row.push_back(scalar_text(g(i, j)));
      if (!g.std_errors.empty()) erow.push_back(g.std_errors[i * sz + j]);
    }
    rows.push_back(row);
    if (!g.std_errors.empty()) errs.push_back(erow);
  }
  json out = {{"domain", g.domain},
              {"n", g.n},
              {"d", g.d},
              {"provenance", g.provenance == GramProvenance::ClosedForm ? "closed-form" : "monte-carlo"},
              {"scale", g.scale},
              {"basis", b},
              {"entries", rows}};
  if (!g.std_errors.empty()) out["std_errors"] = errs;
  return out;
}

template json certificate_to_json(const SosCertificate<GaussRational>&);
template json certificate_to_json(const SosCertificate<Complex>&);
template json witness_to_json(const NegativityWitness<GaussRational>&);
template json witness_to_json(const NegativityWitness<Complex>&);
template json stabilization_to_json(const StabilizationResult<GaussRational>&, const json&);
template json stabilization_to_json(const StabilizationResult<Complex>&, const json&);
template json gram_to_json(const GramMatrix<GaussRational>&);
template json gram_to_json(const GramMatrix<Complex>&);

}  // namespace hermsos::io
