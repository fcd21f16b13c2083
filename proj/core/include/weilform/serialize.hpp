#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "weilform/correspond.hpp"
#include "weilform/exactnum.hpp"
#include "weilform/qseries.hpp"
#include "weilform/weilrep.hpp"

// JSON forms of the library's values. Rationals are always written as
// "p/q" strings (also for integers); the readers accept "p/q" and "p".
// Every reader throws Errc::ParseError on malformed input.

namespace weilform {

using Json = nlohmann::ordered_json;

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

Json to_json(const Cyclotomic& x);
Json to_json(const CycExt& x);
Json to_json(const QExpansion& f);
Json to_json(const VectorForm& F);
Json to_json(const WeilMatrix& m);

/// {"order": N, "a": [...], "b": [...]}.
CycExt cycext_from_json(const Json& j, const FieldPtr& field = nullptr);

/// {"den": d, "trunc": T, "coeffs": [[n, "p/q"], ...]} with an optional
/// "uncertified": [n, ...].
QExpansion series_from_json(const Json& j);

/// {"n1": v, "weight": k, "negated": bool?, "classes": {"r": series, ...}}.
VectorForm vector_form_from_json(const Json& j);

WeilMatrix weil_matrix_from_json(const Json& j);

}  // namespace weilform
