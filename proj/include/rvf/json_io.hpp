#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "rvf/derivation.hpp"
#include "rvf/graded_poly.hpp"
#include "rvf/modforms.hpp"
#include "rvf/supersingular.hpp"

namespace rvf {

/// Lossless polynomial schema:
///   {"p": int|null, "vars": ["e2","e4","e6"],
///    "terms": [{"exp": [i,j,k], "num": "...", "den": "..."}]}
/// Big integers travel as decimal strings; mod-p terms use den = "1" and
/// residue numerators.
nlohmann::json poly_to_json(const GradedPoly<Rational>& poly);
nlohmann::json poly_to_json(const GradedPoly<Fp>& poly, std::uint64_t p);

GradedPoly<Rational> poly_from_json_rational(const nlohmann::json& j);
GradedPoly<Fp> poly_from_json_fp(const nlohmann::json& j);

/// Modulus field of an encoded polynomial; 0 when "p" is null.
std::uint64_t poly_json_modulus(const nlohmann::json& j);

// Payload builders shared by the CLI and the python bindings.
nlohmann::json ab_to_json(const ABPair& ab);
nlohmann::json derivation_to_json(const Derivation<Fp>& d, std::uint64_t p);
nlohmann::json ss_to_json(const SupersingularPolynomial& ss);

} // namespace rvf
