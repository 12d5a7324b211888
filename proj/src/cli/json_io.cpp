#include "qeuclid/json_io.hpp"

#include <stdexcept>

namespace qe {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string string_member(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_string()) malformed(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

Exp4 exp4_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) malformed("exponent must be an array of 4 integers");
    Exp4 e{};
    for (size_t k = 0; k < 4; ++k) {
        if (!j[k].is_number_integer() || j[k].get<int>() < 0) malformed("exponents must be non-negative integers");
        e[k] = j[k].get<int>();
    }
    return e;
}

Json factor_json(const Factor& f) {
    return {{"sector", sector_name(f.sector)}, {"convention", convention_name(f.convention)}};
}

Factor factor_from_json(const Json& j) {
    return {parse_sector(string_member(j, "sector")),
            parse_convention(string_member(j, "convention"))};
}

}  // namespace

Json to_json(const GaussRat& g) { return Json::array({rational_to_string(g.re), rational_to_string(g.im)}); }

Json to_json(const QScalar& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(Json::array({e, rational_to_string(c.re), rational_to_string(c.im)}));
    return {{"terms", terms}};
}

Json to_json(const QRatio& r) {
    Json den = Json::array();
    for (const auto& [d, m] : r.denominator()) den.push_back(Json::array({d, m}));
    return {{"num", to_json(r.numerator())}, {"den", den}};
}

Json to_json(const CoordPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({e, to_json(c)}));
    return {{"sector", sector_name(f.sector())}, {"convention", convention_name(f.convention())}, {"terms", terms}};
}

Json to_json(const PhaseSpacePoly& f) {
    Json terms = Json::array();
    for (const auto& [k, c] : f.terms()) terms.push_back(Json::array({k.first, k.second, to_json(c)}));
    return {{"first", factor_json(f.first())}, {"second", factor_json(f.second())}, {"terms", terms}};
}

Json to_json(const NCPoly& f) {
    Json terms = Json::array();
    for (const auto& [w, c] : f.terms()) {
        Json letters = Json::array();
        for (auto l : w) letters.push_back(static_cast<int>(l));
        terms.push_back({{"letters", letters}, {"coeff", to_json(c)}});
    }
    return {{"sector", sector_name(f.sector())}, {"terms", terms}};
}

QScalar qscalar_from_json(const Json& j) {
    const Json& terms = member(j, "terms");
    if (!terms.is_array()) malformed("QScalar terms must be an array");
    QScalar s;
    for (const Json& t : terms) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_string() || !t[2].is_string())
            malformed("QScalar term must be [exp, \"re\", \"im\"]");
        s.add_term(t[0].get<int>(), GaussRat(rational_from_string(t[1].get<std::string>()),
                                             rational_from_string(t[2].get<std::string>())));
    }
    return s;
}

QRatio qratio_from_json(const Json& j) {
    QRatio::DenMap den;
    const Json& d = member(j, "den");
    if (!d.is_array()) malformed("QRatio den must be an array");
    for (const Json& t : d) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_number_integer())
            malformed("QRatio den entry must be [d, multiplicity]");
        const int idx = t[0].get<int>(), mult = t[1].get<int>();
        if (idx < 2 || mult < 1) malformed("cyclotomic index must be >= 2 with positive multiplicity");
        den[idx] += mult;
    }
    return QRatio(qscalar_from_json(member(j, "num")), den);
}

CoordPoly coordpoly_from_json(const Json& j) {
    CoordPoly f(parse_sector(string_member(j, "sector")),
                parse_convention(string_member(j, "convention")));
    const Json& terms = member(j, "terms");
    if (!terms.is_array()) malformed("CoordPoly terms must be an array");
    for (const Json& t : terms) {
        if (!t.is_array() || t.size() != 2) malformed("CoordPoly term must be [exponents, coefficient]");
        f.add_term(exp4_from_json(t[0]), qratio_from_json(t[1]));
    }
    return f;
}

PhaseSpacePoly phasepoly_from_json(const Json& j) {
    PhaseSpacePoly f(factor_from_json(member(j, "first")), factor_from_json(member(j, "second")));
    const Json& terms = member(j, "terms");
    if (!terms.is_array()) malformed("phase-space terms must be an array");
    for (const Json& t : terms) {
        if (!t.is_array() || t.size() != 3) malformed("phase-space term must be [exponents, exponents, coefficient]");
        f.add_term(exp4_from_json(t[0]), exp4_from_json(t[1]), qratio_from_json(t[2]));
    }
    return f;
}

NCPoly ncpoly_from_json(const Json& j) {
    NCPoly f(parse_sector(string_member(j, "sector")));
    const Json& terms = member(j, "terms");
    if (!terms.is_array()) malformed("NCPoly terms must be an array");
    for (const Json& t : terms) {
        NCWord w;
        const Json& letters = member(t, "letters");
        if (!letters.is_array()) malformed("letters must be an array");
        for (const Json& l : letters) {
            if (!l.is_number_integer() || l.get<int>() < 0 || l.get<int>() > 3) malformed("letters must be 0..3");
            w.push_back(static_cast<std::uint8_t>(l.get<int>()));
        }
        f.add_term(w, qratio_from_json(member(t, "coeff")));
    }
    return f;
}

}  // namespace qe
