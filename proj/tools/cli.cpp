#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "hermsos/errors.hpp"
#include "hermsos/json_io.hpp"

namespace hermsos::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

enum class Tower { Exact, Float };

struct LoadedDomain {
  DomainSpec spec;
  /// Echoed into records; relative point files are made absolute so the
  /// record replays from any working directory.
  json source;
};

BihomPoly<GaussRational> load_poly(const std::string& path) {
  try {
    return io::poly_from_json(io::load_json_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

HoloPoly<GaussRational> load_holo(const std::string& path) {
  try {
    return io::holo_from_json(io::load_json_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

LoadedDomain domain_from_source(json source, const fs::path& base_dir, const std::string& where) {
  try {
    auto spec = io::domain_from_json(source, base_dir);
    if (auto it = source.find("points_file"); it != source.end() && it->is_string()) {
      fs::path p = it->get<std::string>();
      if (p.is_relative()) *it = fs::absolute(base_dir / p).lexically_normal().string();
    }
    return {std::move(spec), std::move(source)};
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

LoadedDomain load_domain(const std::string& path) {
  return domain_from_source(io::load_json_file(path), fs::path(path).parent_path(), path);
}

bool is_sampled(const DomainSpec& d) { return std::holds_alternative<Sampled>(d.kind()); }

/// Sampled domains have no exact Gram, so they always run in floats.
Tower effective_tower(Tower requested, const std::optional<LoadedDomain>& domain, std::ostream& err) {
  if (requested == Tower::Exact && domain && is_sampled(domain->spec)) {
    err << "note: sampled domain, using the float tower\n";
    return Tower::Float;
  }
  return requested;
}

const char* tower_name(Tower t) { return t == Tower::Exact ? "exact" : "float"; }

void emit(const json& j, const std::string& output, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw InputError("cannot write '" + output + "'");
  f << text;
}

void emit_text(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output);
  if (!f) throw InputError("cannot write '" + output + "'");
  f << text;
}

template <ScalarType S>
BihomPoly<S> in_tower(const BihomPoly<GaussRational>& f) {
  if constexpr (ScalarTraits<S>::exact) {
    return f;
  } else {
    return to_float(f);
  }
}

template <ScalarType S>
HoloPoly<S> in_tower(const HoloPoly<GaussRational>& p) {
  if constexpr (ScalarTraits<S>::exact) {
    return p;
  } else {
    HoloPoly<Complex> q(p.num_vars(), p.degree());
    for (const auto& [a, c] : p.terms()) q.add_term(a, c.to_complex());
    return q;
  }
}

json input_record(const BihomPoly<GaussRational>& f, const std::optional<LoadedDomain>& domain, Tower tower,
                  bool strict) {
  return {{"poly", io::poly_to_json(f)},
          {"domain", domain ? domain->source : json(nullptr)},
          {"tower", tower_name(tower)},
          {"strict", strict}};
}

json verify_report_json(const VerifyReport& r) {
  json j = {{"pass", r.pass}, {"reason", r.reason}, {"residual", r.residual}, {"residual_bound", r.residual_bound}};
  j["entry"] = r.entry ? json::array({r.entry->first, r.entry->second}) : json(nullptr);
  return j;
}

// ------------------------------------------------------------- stabilize

struct StabilizeArgs {
  std::string poly;
  std::string domain;
  bool euclidean = false;
  int d_max = 50;
  bool strict = false;
  std::string tower = "exact";
  unsigned jobs = 1;
  bool no_precheck = false;
  std::string output;
};

template <ScalarType S>
int stabilize_in(const StabilizeArgs& a, const BihomPoly<GaussRational>& f0, const std::optional<LoadedDomain>& dom,
                 Tower tower, std::ostream& out, std::ostream& err) {
  StabilizeOptions opt;
  opt.d_max = a.d_max;
  opt.strict = a.strict;
  opt.jobs = a.jobs;
  opt.precheck = !a.no_precheck;
  const auto f = in_tower<S>(f0);
  const auto result = dom ? stabilize_domain(f, dom->spec, opt) : stabilize_euclidean(f, opt);
  emit(io::stabilization_to_json(result, input_record(f0, dom, tower, a.strict)), a.output, out);
  switch (result.outcome) {
    case StabilizationOutcome::Stabilized:
      err << "stabilized at d0=" << *result.d0 << "\n";
      return kOk;
    case StabilizationOutcome::CapExceeded:
      err << "no certificate for d <= " << a.d_max << " (cap exceeded; not a disproof)\n";
      return kNoCertificate;
    case StabilizationOutcome::HypothesisViolated:
      err << "f is negative on the unit sphere (value " << *result.disproof_value << ")\n";
      return kHypothesisViolated;
  }
  return kInputError;
}

int cmd_stabilize(const StabilizeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.euclidean == !a.domain.empty()) throw InputError("stabilize: give exactly one of --euclidean or --domain");
  if (a.d_max < 0) throw InputError("stabilize: --d-max must be non-negative");
  const auto f = load_poly(a.poly);
  std::optional<LoadedDomain> dom;
  if (!a.domain.empty()) dom = load_domain(a.domain);
  const Tower tower = effective_tower(a.tower == "exact" ? Tower::Exact : Tower::Float, dom, err);
  return tower == Tower::Exact ? stabilize_in<GaussRational>(a, f, dom, tower, out, err)
                               : stabilize_in<Complex>(a, f, dom, tower, out, err);
}

// ------------------------------------------------------------- decompose

struct DecomposeArgs {
  std::string poly;
  std::string domain;
  int d = 0;
  bool strict = false;
  std::string tower = "exact";
  std::string output;
};

template <ScalarType S>
int decompose_in(const DecomposeArgs& a, const BihomPoly<GaussRational>& f0, const std::optional<LoadedDomain>& dom,
                 Tower tower, std::ostream& out, std::ostream& err) {
  const auto product = stabilization_product(in_tower<S>(f0), dom ? &dom->spec : nullptr, a.d);
  const ProductLabel label{dom ? dom->spec.id() : "euclidean", a.d};
  auto result = decompose(product, a.strict, label);
  json j = {{"input", input_record(f0, dom, tower, a.strict)}, {"certificate", nullptr}};
  int code = kOk;
  if (auto* cert = std::get_if<SosCertificate<S>>(&result)) {
    j["result"] = "certificate";
    j["certificate"] = io::certificate_to_json(*cert);
    err << "squared norm of rank " << cert->rank << "\n";
  } else if (auto* w = std::get_if<NegativityWitness<S>>(&result)) {
    j["result"] = "witness";
    j["witness"] = io::witness_to_json(*w);
    err << "not a squared norm (negativity witness)\n";
    code = kNoCertificate;
  } else {
    const auto& v = std::get<StrictnessViolation>(result);
    j["result"] = "not_strict";
    j["strictness"] = {{"position", v.position}, {"rank", v.rank}, {"size", v.size}};
    err << "positive semidefinite but singular (strict mode)\n";
    code = kNoCertificate;
  }
  emit(j, a.output, out);
  return code;
}

int cmd_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.d < 0) throw InputError("decompose: --d must be non-negative");
  const auto f = load_poly(a.poly);
  std::optional<LoadedDomain> dom;
  if (!a.domain.empty()) dom = load_domain(a.domain);
  const Tower tower = effective_tower(a.tower == "exact" ? Tower::Exact : Tower::Float, dom, err);
  return tower == Tower::Exact ? decompose_in<GaussRational>(a, f, dom, tower, out, err)
                               : decompose_in<Complex>(a, f, dom, tower, out, err);
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string record;
  std::string output;
};

template <ScalarType S>
VerifyReport verify_in(const json& cert_j, const BihomPoly<GaussRational>& f0, const std::optional<LoadedDomain>& dom) {
  SosCertificate<S> cert;
  if constexpr (ScalarTraits<S>::exact) {
    cert = io::exact_certificate_from_json(cert_j);
  } else {
    cert = io::float_certificate_from_json(cert_j);
  }
  const std::string expected = dom ? dom->spec.id() : "euclidean";
  if (cert.label.domain != expected)
    throw InputError("verify: certificate is labelled '" + cert.label.domain + "' but the input domain is '" +
                     expected + "'");
  const auto product = stabilization_product(in_tower<S>(f0), dom ? &dom->spec : nullptr, cert.label.d);
  return verify(cert, product);
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const json record = io::load_json_file(a.record);
  const std::string ctx = a.record;
  if (!record.is_object() || !record.contains("input") || !record.contains("certificate"))
    throw InputError(ctx + ": expected a stabilize or decompose record with 'input' and 'certificate'");
  const auto& input = record["input"];
  if (!input.is_object() || !input.contains("poly")) throw InputError(ctx + ": input: missing field 'poly'");
  const auto& cert_j = record["certificate"];
  if (cert_j.is_null()) {
    err << "record carries no certificate\n";
    emit(verify_report_json({false, "record carries no certificate", {}, 0.0, 0.0}), a.output, out);
    return kNoCertificate;
  }
  BihomPoly<GaussRational> f(1, 0);
  try {
    f = io::poly_from_json(input["poly"]);
  } catch (const InputError& e) {
    throw InputError(ctx + ": input." + e.what());
  }
  std::optional<LoadedDomain> dom;
  if (input.contains("domain") && !input["domain"].is_null())
    dom = domain_from_source(input["domain"], fs::path(a.record).parent_path(), ctx + ": input");
  if (!cert_j.contains("tower") || !cert_j["tower"].is_string())
    throw InputError(ctx + ": certificate: missing field 'tower'");
  const std::string tower = cert_j["tower"].get<std::string>();
  VerifyReport report;
  if (tower == ScalarTraits<GaussRational>::name) {
    report = verify_in<GaussRational>(cert_j, f, dom);
  } else if (tower == ScalarTraits<Complex>::name) {
    report = verify_in<Complex>(cert_j, f, dom);
  } else {
    throw InputError(ctx + ": certificate: unknown tower '" + tower + "'");
  }
  emit(verify_report_json(report), a.output, out);
  err << (report.pass ? "certificate verified\n" : "certificate rejected: " + report.reason + "\n");
  return report.pass ? kOk : kNoCertificate;
}

// ------------------------------------------------------- gram, phi, mc-ip

struct GramArgs {
  std::string domain;
  int d = 1;
  std::string tower = "exact";
  bool mc = false;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string output;
};

int cmd_gram(const GramArgs& a, std::ostream& out, std::ostream& err) {
  if (a.d < 0) throw InputError("gram: --d must be non-negative");
  std::optional<LoadedDomain> dom = load_domain(a.domain);
  if (a.mc) {
    McOptions mc{a.samples, a.seed, a.jobs};
    emit(io::gram_to_json(mc_gram(dom->spec, a.d, mc)), a.output, out);
    return kOk;
  }
  const Tower tower = effective_tower(a.tower == "exact" ? Tower::Exact : Tower::Float, dom, err);
  if (tower == Tower::Exact) {
    emit(io::gram_to_json(gram<GaussRational>(dom->spec, a.d)), a.output, out);
  } else {
    emit(io::gram_to_json(gram<Complex>(dom->spec, a.d)), a.output, out);
  }
  return kOk;
}

struct PhiArgs {
  std::string domain;
  int d = 1;
  std::string tower = "exact";
  std::string output;
};

int cmd_phi(const PhiArgs& a, std::ostream& out, std::ostream& err) {
  if (a.d < 0) throw InputError("phi: --d must be non-negative");
  std::optional<LoadedDomain> dom = load_domain(a.domain);
  const Tower tower = effective_tower(a.tower == "exact" ? Tower::Exact : Tower::Float, dom, err);
  json j = {{"domain", dom->spec.id()}, {"d", a.d}, {"tower", tower_name(tower)}, {"scale", dom->spec.scale()}};
  if (tower == Tower::Exact) {
    j["phi_squared_norm"] = io::poly_to_json(phi_squared_norm<GaussRational>(dom->spec, a.d));
  } else {
    j["phi_squared_norm"] = io::poly_to_json(phi_squared_norm<Complex>(dom->spec, a.d));
  }
  emit(j, a.output, out);
  return kOk;
}

struct McIpArgs {
  std::string domain;
  std::string p;
  std::string q;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string output;
};

int cmd_mc_ip(const McIpArgs& a, std::ostream& out, std::ostream&) {
  const auto dom = load_domain(a.domain);
  const auto p = load_holo(a.p);
  const auto q = load_holo(a.q);
  if (p.num_vars() != dom.spec.dim() || q.num_vars() != dom.spec.dim())
    throw DimensionMismatch("mc-ip: polynomial and domain dimensions differ");
  const auto est = mc_inner_product(dom.spec, p, q, McOptions{a.samples, a.seed, a.jobs});
  json j = io::mc_estimate_to_json(est);
  j["domain"] = dom.spec.id();
  j["samples"] = a.samples;
  j["seed"] = a.seed;
  j["scale"] = dom.spec.scale();
  emit(j, a.output, out);
  return kOk;
}

// ------------------------------------------------------------ diagnostics

struct BergmanArgs {
  std::string domain;
  int max_degree = 6;
  int steps = 10;
  std::vector<double> direction;
  std::string output;
};

/// Points t * r_max * u for t in (0, 1), where r_max is where the ray
/// along u meets the boundary (found by bisection on membership).
std::vector<std::vector<Complex>> radial_points(const DomainSpec& dom, std::vector<Complex> u, int steps) {
  double norm = 0.0;
  for (const auto& c : u) norm += std::norm(c);
  if (norm == 0.0) throw InputError("bergman-diag: --direction must be nonzero");
  for (auto& c : u) c /= std::sqrt(norm);
  const auto radii = dom.bounding_radii();
  double hi = 0.0;
  for (double r : radii) hi += r;
  hi = 2.0 * hi + 1.0;
  double lo = 0.0;
  auto at = [&](double r) {
    std::vector<Complex> z(u);
    for (auto& c : z) c *= r;
    return z;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const auto z = at(mid);
    (dom.contains(std::span<const Complex>(z)) ? lo : hi) = mid;
  }
  std::vector<std::vector<Complex>> pts;
  for (int k = 0; k < steps; ++k) pts.push_back(at(lo * static_cast<double>(k) / steps));
  return pts;
}

int cmd_bergman_diag(const BergmanArgs& a, std::ostream& out, std::ostream&) {
  if (a.max_degree < 0) throw InputError("bergman-diag: --max-degree must be non-negative");
  if (a.steps < 1) throw InputError("bergman-diag: --steps must be positive");
  const auto dom = load_domain(a.domain);
  if (is_sampled(dom.spec)) throw InputError("bergman-diag: sampled domains have no boundary to walk toward");
  const int n = dom.spec.dim();
  std::vector<Complex> u(static_cast<std::size_t>(n), Complex(1.0));
  if (!a.direction.empty()) {
    if (a.direction.size() != static_cast<std::size_t>(2 * n))
      throw InputError("bergman-diag: --direction takes 2n numbers (real parts, then imaginary parts)");
    for (int j = 0; j < n; ++j)
      u[static_cast<std::size_t>(j)] = Complex(a.direction[static_cast<std::size_t>(j)],
                                               a.direction[static_cast<std::size_t>(n + j)]);
  }
  const TruncatedKernel kernel(dom.spec, a.max_degree);
  std::ostringstream csv;
  write_diagonal_csv(csv, kernel, radial_points(dom.spec, u, a.steps));
  emit_text(csv.str(), a.output, out);
  return kOk;
}

struct SphereArgs {
  std::string poly;
  std::size_t samples = 2048;
  std::size_t refinements = 60;
  std::string output;
};

int cmd_sphere_min(const SphereArgs& a, std::ostream& out, std::ostream& err) {
  const auto f = load_poly(a.poly);
  if (!f.is_hermitian()) throw NonHermitian("sphere-min: f is not Hermitian-symmetric");
  const auto est = check_positive_on_sphere(f, a.samples, a.refinements);
  json j = io::sphere_to_json(est);
  j["negative"] = est.minimum < 0.0;
  emit(j, a.output, out);
  if (est.minimum < 0.0) {
    err << "negative value found on the unit sphere\n";
    return kHypothesisViolated;
  }
  return kOk;
}

void add_tower(CLI::App* app, std::string& tower) {
  app->add_option("--tower", tower, "Scalar tower")->check(CLI::IsMember({"exact", "float"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabilization certificates for positive bihomogeneous polynomials"};
  app.require_subcommand(1);

  StabilizeArgs st;
  auto* s = app.add_subcommand("stabilize", "Least d with m_d * f a squared norm");
  s->add_option("poly", st.poly, "Polynomial JSON")->required();
  s->add_flag("--euclidean", st.euclidean, "Multiply by ||z||^{2d}");
  s->add_option("--domain", st.domain, "Domain JSON; multiply by ||Phi^d||^2");
  s->add_option("--d-max", st.d_max, "Largest degree tried");
  s->add_flag("--strict", st.strict, "Require a positive definite matrix");
  add_tower(s, st.tower);
  s->add_option("--jobs", st.jobs, "Degrees evaluated concurrently")->check(CLI::PositiveNumber);
  s->add_flag("--no-precheck", st.no_precheck, "Skip the sphere positivity check");
  s->add_option("-o,--output", st.output, "Write JSON here instead of stdout");

  DecomposeArgs de;
  auto* dc = app.add_subcommand("decompose", "Squared-norm certificate or negativity witness for m_d * f");
  dc->add_option("poly", de.poly, "Polynomial JSON")->required();
  dc->add_option("--domain", de.domain, "Domain JSON (default: Euclidean multiplier)");
  dc->add_option("--d", de.d, "Multiplier degree (0: f itself)");
  dc->add_flag("--strict", de.strict, "Require a positive definite matrix");
  add_tower(dc, de.tower);
  dc->add_option("-o,--output", de.output, "Write JSON here instead of stdout");

  VerifyArgs ve;
  auto* v = app.add_subcommand("verify", "Replay the certificate in a stabilize or decompose record");
  v->add_option("record", ve.record, "Record JSON")->required();
  v->add_option("-o,--output", ve.output, "Write JSON here instead of stdout");

  GramArgs gr;
  auto* g = app.add_subcommand("gram", "Monomial Gram matrix of a domain at degree d");
  g->add_option("domain", gr.domain, "Domain JSON")->required();
  g->add_option("--d", gr.d, "Degree")->required();
  add_tower(g, gr.tower);
  g->add_flag("--mc", gr.mc, "Monte-Carlo estimate instead of the closed form");
  g->add_option("--samples", gr.samples, "Monte-Carlo sample count")->check(CLI::PositiveNumber);
  g->add_option("--seed", gr.seed, "Monte-Carlo seed");
  g->add_option("--jobs", gr.jobs, "Worker threads")->check(CLI::PositiveNumber);
  g->add_option("-o,--output", gr.output, "Write JSON here instead of stdout");

  PhiArgs ph;
  auto* p = app.add_subcommand("phi", "||Phi^d||^2 for a domain");
  p->add_option("domain", ph.domain, "Domain JSON")->required();
  p->add_option("--d", ph.d, "Degree")->required();
  add_tower(p, ph.tower);
  p->add_option("-o,--output", ph.output, "Write JSON here instead of stdout");

  BergmanArgs be;
  auto* b = app.add_subcommand("bergman-diag", "CSV of truncated kernel diagonals along a ray to the boundary");
  b->add_option("domain", be.domain, "Domain JSON")->required();
  b->add_option("--max-degree", be.max_degree, "Truncation degree D");
  b->add_option("--steps", be.steps, "Points along the ray");
  b->add_option("--direction", be.direction, "Ray direction: real parts then imaginary parts")->delimiter(',');
  b->add_option("-o,--output", be.output, "Write CSV here instead of stdout");

  SphereArgs sp;
  auto* sm = app.add_subcommand("sphere-min", "Estimate the minimum of f on the unit sphere");
  sm->add_option("poly", sp.poly, "Polynomial JSON")->required();
  sm->add_option("--samples", sp.samples, "Quasi-random starting samples");
  sm->add_option("--refinements", sp.refinements, "Descent iterations per start");
  sm->add_option("-o,--output", sp.output, "Write JSON here instead of stdout");

  McIpArgs mi;
  auto* m = app.add_subcommand("mc-ip", "Monte-Carlo inner product <p, q> over a domain");
  m->add_option("domain", mi.domain, "Domain JSON")->required();
  m->add_option("p", mi.p, "Holomorphic polynomial JSON")->required();
  m->add_option("q", mi.q, "Holomorphic polynomial JSON")->required();
  m->add_option("--samples", mi.samples, "Sample count")->check(CLI::PositiveNumber);
  m->add_option("--seed", mi.seed, "Seed");
  m->add_option("--jobs", mi.jobs, "Worker threads")->check(CLI::PositiveNumber);
  m->add_option("-o,--output", mi.output, "Write JSON here instead of stdout");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*s) return cmd_stabilize(st, out, err);
    if (*dc) return cmd_decompose(de, out, err);
    if (*v) return cmd_verify(ve, out, err);
    if (*g) return cmd_gram(gr, out, err);
    if (*p) return cmd_phi(ph, out, err);
    if (*b) return cmd_bergman_diag(be, out, err);
    if (*sm) return cmd_sphere_min(sp, out, err);
    if (*m) return cmd_mc_ip(mi, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace hermsos::cli
