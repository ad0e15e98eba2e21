#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hermsos/bergman.hpp"
#include "hermsos/stabilize.hpp"

namespace hermsos::io {

using nlohmann::json;

/// Reads and parses a JSON file; InputError names the file on failure.
json load_json_file(const std::filesystem::path& path);

/// {"n":2,"m":2,"terms":[{"mu":[2,0],"nu":[2,0],"re":"1","im":"0"}, ...]}.
/// A term with mu != nu implies its conjugate partner; listing both with
/// inconsistent values is rejected.
BihomPoly<GaussRational> poly_from_json(const json& j);
json poly_to_json(const BihomPoly<GaussRational>& f);
json poly_to_json(const BihomPoly<Complex>& f);

/// {"n":2,"d":1,"terms":[{"alpha":[1,0],"re":"1","im":"0"}]}
HoloPoly<GaussRational> holo_from_json(const json& j);
json holo_to_json(const HoloPoly<GaussRational>& p);
json holo_to_json(const HoloPoly<Complex>& p);

/// {"kind":"ball","n":2}, {"kind":"polydisc","n":2}, {"kind":"egg","p":3},
/// {"kind":"linear-ball","A":[["3/5","4/5"],["-4/5","3/5"]]},
/// {"kind":"sampled","points_file":"pts.txt","volume":4.93}.
/// Relative points_file paths resolve against base_dir.
DomainSpec domain_from_json(const json& j, const std::filesystem::path& base_dir = {});
json domain_to_json(const DomainSpec& domain);

/// One point per line: re_1 ... re_n im_1 ... im_n (spaces or commas).
std::vector<Complex> load_points(const std::filesystem::path& path, int& n);

template <ScalarType S>
json certificate_to_json(const SosCertificate<S>& cert);
SosCertificate<GaussRational> exact_certificate_from_json(const json& j);
SosCertificate<Complex> float_certificate_from_json(const json& j);

template <ScalarType S>
json witness_to_json(const NegativityWitness<S>& w);

json sphere_to_json(const SphereMinEstimate& s);

/// Full search record. `input` is echoed so the record can be replayed.
template <ScalarType S>
json stabilization_to_json(const StabilizationResult<S>& r, const json& input);

template <ScalarType S>
json gram_to_json(const GramMatrix<S>& g);

json mc_estimate_to_json(const McEstimate& e);

std::string scalar_text(const GaussRational& s);
std::string scalar_text(const Complex& s);

}  // namespace hermsos::io
