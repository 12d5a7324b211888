// JSON encodings of the exact types.
//
//   QScalar:   {"terms": [[exp, "re", "im"], ...]}, rationals as "num/den"
//   QRatio:    {"num": QScalar, "den": [[d, multiplicity], ...]}
//   CoordPoly: {"sector": "x"|"p", "convention": "W"|"Wt", "terms": [[[e0, e1, e2, e3], QRatio], ...]}
//   PhaseSpacePoly: {"first": {...}, "second": {...}, "terms": [[[...], [...], QRatio], ...]}
//   NCPoly:    {"sector": "x"|"p", "terms": [{"letters": [..], "coeff": QRatio}, ...]}
// Objects are emitted with sorted keys, so dump() output is canonical.
#pragma once

#include "json.hpp"
#include "qeuclid/ncalgebra.hpp"

namespace qe {

using Json = nlohmann::json;

Json to_json(const GaussRat& g);  // ["re", "im"]
Json to_json(const QScalar& s);
Json to_json(const QRatio& r);
Json to_json(const CoordPoly& f);
Json to_json(const PhaseSpacePoly& f);
Json to_json(const NCPoly& f);

// Parsers throw std::invalid_argument on malformed input.
QScalar qscalar_from_json(const Json& j);
QRatio qratio_from_json(const Json& j);
CoordPoly coordpoly_from_json(const Json& j);
PhaseSpacePoly phasepoly_from_json(const Json& j);
NCPoly ncpoly_from_json(const Json& j);

}  // namespace qe
