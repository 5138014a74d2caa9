#pragma once

// JSON forms of the engine's values.
//
//   Polynomial   {"vars": [...], "terms": [{"c": "p/q", "e": [...]}, ...]}
//   IdealBasis   {"ring": [...], "order": "lex", "label": "...", "generators": [Polynomial...]}
//   SystemSpec   {"n": 2, "m": 5, "q_weights": ["1", "0", ...], "f_symbol": "y"}
//
// Terms are written in canonical order; readers accept any order and
// canonicalize. Malformed documents raise std::invalid_argument.

#include <json.hpp>

#include "lexgb/groebner.hpp"
#include "lexgb/ideal_basis.hpp"
#include "lexgb/report.hpp"
#include "lexgb/systems.hpp"

namespace lexgb {

using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& f);
/// Uses `ring` when its names match the document's "vars"; otherwise builds
/// a fresh ring from them.
Polynomial polynomial_from_json(const Json& j, const Ring& ring = nullptr);

Json to_json(const IdealBasis& b);
IdealBasis basis_from_json(const Json& j);

Json to_json(const SystemSpec& s);
SystemSpec spec_from_json(const Json& j);

Json to_json(const BuchbergerLog& log, const BuchbergerOptions& opts);

Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

}  // namespace lexgb
