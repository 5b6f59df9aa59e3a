#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "swmap/ambiguity.hpp"

namespace swmap::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed or incompatible file contents.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid session parameters.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json to_json(const Rational& q);
json to_json(const ThetaScalar& c);
json to_json(const XPolynomial& p);
json to_json(const AElement& a);
json to_json(const TensorSymbol& s);
json to_json(const VerificationReport& r);
json to_json(const CohomologyClassReport& r, const std::vector<std::string>& names);
json to_json(const AmbiguityCocycle& g);
/// theta^{ij}_hat field strength, upper triangle i < j in row-major order.
json field_strength_json(const AElement& A, const Deformation& theta);

ThetaScalar theta_scalar_from_json(const json& j, int symbols);
XPolynomial xpoly_from_json(const json& j, int n, int symbols);
AElement aelement_from_json(const json& j, int n, int symbols);
TensorSymbol tensor_symbol_from_json(const json& j, int n, int symbols);
AmbiguityCocycle cocycle_from_json(const json& j, int n, int symbols);

/// "0", "sym", or a square antisymmetric matrix of rationals (numbers or
/// strings such as "1/2").
Deformation deformation_from_json(const json& spec, int n, int first_symbol);
json deformation_to_json(const Deformation& d);

json morphism_to_json(const Morphism& f);
Morphism morphism_from_json(const json& j);

/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);
json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

struct SessionConfig {
    int n = 2;
    json theta = "0";
    json theta_prime = "sym";
    int L = 2;
    int D = 3;
    unsigned seed = 0;
    int jobs = 1;
};

/// Keys n, theta, theta_prime, L, D, seed, jobs; missing keys keep defaults.
SessionConfig config_from_json(const json& j, SessionConfig base = {});
/// Throws ConfigError on any invalid value.
MorphismSettings to_settings(const SessionConfig& c);

/// "x1^2*x2 - 1/2*x1 + 3": rational coefficients, variables x1..xn.
XPolynomial parse_xpoly(const std::string& text, int n);
/// Components of a degree-1 element separated by ';', e.g. "x2; 0".
AElement parse_field(const std::string& text, int n);

/// One term per line in canonical order.
std::string to_string(const TensorSymbol& s, const std::vector<std::string>& names);

}  // namespace swmap::io
