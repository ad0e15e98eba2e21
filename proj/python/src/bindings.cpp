// Python bindings. Structured values cross the boundary as JSON text in the
// same schemas the command-line tool reads and writes; the Python package
// wraps these in dict-based helpers.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "hermsos/errors.hpp"
#include "hermsos/json_io.hpp"

namespace py = pybind11;
using hermsos::io::json;

namespace {

using namespace hermsos;

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::optional<DomainSpec> maybe_domain(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return io::domain_from_json(parse(*text, "domain"));
}

bool wants_float(const std::string& tower, const std::optional<DomainSpec>& d) {
  if (tower != "exact" && tower != "float") throw InputError("tower must be 'exact' or 'float'");
  return tower == "float" || (d && std::holds_alternative<Sampled>(d->kind()));
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
std::string stabilize_as(const BihomPoly<GaussRational>& f, const std::optional<DomainSpec>& d,
                         const std::optional<std::string>& domain_text, const StabilizeOptions& opt,
                         const std::string& tower) {
  const auto g = in_tower<S>(f);
  const auto r = d ? stabilize_domain(g, *d, opt) : stabilize_euclidean(g, opt);
  json input = {{"poly", io::poly_to_json(f)},
                {"domain", domain_text ? parse(*domain_text, "domain") : json(nullptr)},
                {"tower", tower},
                {"strict", opt.strict}};
  return io::stabilization_to_json(r, input).dump();
}

std::string stabilize(const std::string& poly, const std::optional<std::string>& domain, int d_max, bool strict,
                      const std::string& tower, unsigned jobs) {
  const auto f = io::poly_from_json(parse(poly, "polynomial"));
  const auto d = maybe_domain(domain);
  StabilizeOptions opt;
  opt.d_max = d_max;
  opt.strict = strict;
  opt.jobs = jobs;
  return wants_float(tower, d) ? stabilize_as<Complex>(f, d, domain, opt, "float")
                               : stabilize_as<GaussRational>(f, d, domain, opt, "exact");
}

template <ScalarType S>
std::string decompose_as(const BihomPoly<GaussRational>& f, bool strict) {
  auto r = decompose(in_tower<S>(f), strict);
  json out;
  if (auto* c = std::get_if<SosCertificate<S>>(&r)) {
    out = {{"result", "certificate"}, {"certificate", io::certificate_to_json(*c)}};
  } else if (auto* w = std::get_if<NegativityWitness<S>>(&r)) {
    out = {{"result", "witness"}, {"witness", io::witness_to_json(*w)}};
  } else {
    out = {{"result", "not_strict"}};
  }
  return out.dump();
}

std::string decompose_poly(const std::string& poly, bool strict, const std::string& tower) {
  const auto f = io::poly_from_json(parse(poly, "polynomial"));
  return wants_float(tower, std::nullopt) ? decompose_as<Complex>(f, strict) : decompose_as<GaussRational>(f, strict);
}

template <ScalarType S>
VerifyReport verify_as(const json& cert_j, const BihomPoly<GaussRational>& f, const std::optional<DomainSpec>& d) {
  SosCertificate<S> cert;
  if constexpr (ScalarTraits<S>::exact) {
    cert = io::exact_certificate_from_json(cert_j);
  } else {
    cert = io::float_certificate_from_json(cert_j);
  }
  const std::string expected = d ? d->id() : "euclidean";
  if (cert.label.domain != expected) return {false, "certificate is for domain '" + cert.label.domain + "'", {}, 0, 0};
  return verify(cert, stabilization_product(in_tower<S>(f), d ? &*d : nullptr, cert.label.d));
}

py::dict verify_certificate(const std::string& certificate, const std::string& poly,
                            const std::optional<std::string>& domain) {
  const json cert_j = parse(certificate, "certificate");
  const auto f = io::poly_from_json(parse(poly, "polynomial"));
  const auto d = maybe_domain(domain);
  const std::string tower = cert_j.value("tower", std::string("exact"));
  const auto report = tower == "exact" ? verify_as<GaussRational>(cert_j, f, d) : verify_as<Complex>(cert_j, f, d);
  py::dict out;
  out["pass"] = report.pass;
  out["reason"] = report.reason;
  out["residual"] = report.residual;
  out["residual_bound"] = report.residual_bound;
  return out;
}

std::string gram_json(const std::string& domain, int d, const std::string& tower) {
  const auto dom = *maybe_domain(domain);
  return wants_float(tower, dom) ? io::gram_to_json(gram<Complex>(dom, d)).dump()
                                 : io::gram_to_json(gram<GaussRational>(dom, d)).dump();
}

std::string phi_json(const std::string& domain, int d) {
  const auto dom = *maybe_domain(domain);
  return wants_float("exact", dom) ? io::poly_to_json(phi_squared_norm<Complex>(dom, d)).dump()
                                   : io::poly_to_json(phi_squared_norm<GaussRational>(dom, d)).dump();
}

py::tuple mc_ip(const std::string& domain, const std::string& p, const std::string& q, std::size_t samples,
                std::uint64_t seed, unsigned jobs) {
  const auto dom = *maybe_domain(domain);
  const auto est = mc_inner_product(dom, io::holo_from_json(parse(p, "p")), io::holo_from_json(parse(q, "q")),
                                    McOptions{samples, seed, jobs});
  return py::make_tuple(est.value, est.std_error);
}

double evaluate(const std::string& poly, const std::vector<Complex>& z) {
  const auto f = to_float(io::poly_from_json(parse(poly, "polynomial")));
  if (static_cast<int>(z.size()) != f.num_vars()) throw DimensionMismatch("evaluate: point has the wrong length");
  return eval(f, std::span<const Complex>(z));
}

py::tuple sphere_min(const std::string& poly, std::size_t samples, std::size_t refinements) {
  const auto est = check_positive_on_sphere(io::poly_from_json(parse(poly, "polynomial")), samples, refinements);
  return py::make_tuple(est.minimum, est.argmin);
}

std::vector<std::vector<int>> basis(int n, int d) {
  std::vector<std::vector<int>> out;
  for (const auto& a : enumerate_basis(n, d)) out.emplace_back(a.exponents().begin(), a.exponents().end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact squared-norm certificates for bihomogeneous polynomials";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<hermsos::Error>(m, "HermsosError", PyExc_RuntimeError);
  py::register_exception<hermsos::InputError>(m, "InputError", PyExc_ValueError);

  m.def("enumerate_basis", &basis, py::arg("n"), py::arg("d"), "Degree-d exponents in graded-lex order");
  m.def("evaluate", &evaluate, py::arg("poly"), py::arg("z"));
  m.def("stabilize", &stabilize, py::arg("poly"), py::arg("domain") = py::none(), py::arg("d_max") = 50,
        py::arg("strict") = false, py::arg("tower") = "exact", py::arg("jobs") = 1u);
  m.def("decompose", &decompose_poly, py::arg("poly"), py::arg("strict") = false, py::arg("tower") = "exact");
  m.def("verify", &verify_certificate, py::arg("certificate"), py::arg("poly"), py::arg("domain") = py::none());
  m.def("gram", &gram_json, py::arg("domain"), py::arg("d"), py::arg("tower") = "exact");
  m.def("phi_squared_norm", &phi_json, py::arg("domain"), py::arg("d"));
  m.def("mc_inner_product", &mc_ip, py::arg("domain"), py::arg("p"), py::arg("q"), py::arg("samples") = 100000,
        py::arg("seed") = 1, py::arg("jobs") = 1u);
  m.def("sphere_min", &sphere_min, py::arg("poly"), py::arg("samples") = 2048, py::arg("refinements") = 60);
}
