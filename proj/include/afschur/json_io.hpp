#pragma once

#include <json.hpp>

#include "afschur/pbw.hpp"
#include "afschur/verifier.hpp"

namespace afschur {

// Interchange forms.  Matrices: {"n": int, "entries": [[i, j, a], ...]}
// with canonical rows and entries sorted by (i, j).  Elements:
// {"n":, "r":, "terms": [{"coeff": "p/q", "matrix": {...}}, ...]} in
// canonical term order; output is byte-identical across runs.

nlohmann::json matrix_to_json(const AffineMatrix& A);
AffineMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json composition_to_json(const Composition& lam);
Composition composition_from_json(const nlohmann::json& j, int n);

nlohmann::json element_to_json(const AlgebraElement& x);
AlgebraElement element_from_json(const nlohmann::json& j);

nlohmann::json coordinates_to_json(const PBWCoordinates& coords, int n,
                                   const Int& r);

// Generator-word vocabulary: "e<i>", "f<i>", "h<i>", "k<p1,p2,...>",
// "E<i>,<j>".
GeneratorSymbol parse_generator_token(const std::string& token, int n);
GeneratorWord parse_word(const nlohmann::json& tokens, int n);

nlohmann::json verify_report_to_json(const VerifyReport& report);
nlohmann::json closed_form_report_to_json(const ClosedFormReport& report);

// Wrapper around nlohmann parsing that rethrows as ParseError, keeping
// the position-annotated message.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace afschur
