#include "qeuclid/starcalc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qe {

std::string index_name(Index a) {
    switch (a) {
        case Index::Plus: return "+";
        case Index::Three: return "3";
        case Index::Minus: return "-";
        case Index::Zero: return "0";
    }
    return "?";
}

Index parse_index(const std::string& s) {
    if (s == "+") return Index::Plus;
    if (s == "3") return Index::Three;
    if (s == "-") return Index::Minus;
    if (s == "0") return Index::Zero;
    throw std::invalid_argument("unknown index '" + s + "'");
}

QScalar metric(Index a, Index b) {
    if (a == Index::Three && b == Index::Three) return QScalar(1);
    if (a == Index::Plus && b == Index::Minus) return -QScalar::q_pow(1);
    if (a == Index::Minus && b == Index::Plus) return -QScalar::q_pow(-1);
    return QScalar();
}

Index metric_partner(Index a) {
    switch (a) {
        case Index::Plus: return Index::Minus;
        case Index::Minus: return Index::Plus;
        default: return a;
    }
}

namespace {

QScalar lambda_power(int k) {
    static std::vector<QScalar> cache{QScalar(1)};
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * lambda());
    return cache[static_cast<size_t>(k)];
}

}  // namespace

void star_monomials(const Exp4& a, const Exp4& b, Convention c, std::vector<StarTerm>& out) {
    out.clear();
    const SlotFrame fr = slot_frame(c);
    const int qs = fr.qsign;
    const int a1 = a[fr.var[0]], a2 = a[fr.var[1]], a3 = a[fr.var[2]];
    const int b1 = b[fr.var[0]], b2 = b[fr.var[1]], b3 = b[fr.var[2]];
    const int kmax = std::min(a3, b1);
    for (int k = 0; k <= kmax; ++k) {
        QScalar coeff = lambda_power(k) * q_binomial(a3, k, 4 * qs) * q_falling(b1, k, 4 * qs);
        if (qs < 0 && (k % 2 == 1)) coeff = -coeff;  // (1/q - q)^k = (-lambda)^k
        coeff = coeff.shifted(2 * qs * (a2 * (b1 - k) + (a3 - k) * b2));
        Exp4 e{};
        e[fr.var[0]] = a1 + b1 - k;
        e[fr.var[1]] = a2 + b2 + 2 * k;
        e[fr.var[2]] = a3 + b3 - k;
        e[3] = a[3] + b[3];
        out.push_back({e, std::move(coeff)});
    }
}

CoordPoly star_product(const CoordPoly& f, const CoordPoly& g) {
    if (f.sector() != g.sector() || f.convention() != g.convention())
        throw std::invalid_argument("star_product: sector/convention mismatch");
    CoordPoly r(f.sector(), f.convention());
    std::vector<StarTerm> buf;
    for (const auto& [ea, ca] : f.terms())
        for (const auto& [eb, cb] : g.terms()) {
            star_monomials(ea, eb, f.convention(), buf);
            const QRatio cab = ca * cb;
            for (auto& t : buf) r.add_term(t.exp, cab * QRatio(t.coeff));
        }
    return r;
}

CoordPoly star_power(const CoordPoly& f, unsigned n) {
    CoordPoly r = CoordPoly::constant(f.sector(), f.convention(), QRatio(1));
    for (unsigned k = 0; k < n; ++k) r = star_product(r, f);
    return r;
}

PhaseSpacePoly star_product(const PhaseSpacePoly& f, const PhaseSpacePoly& g) {
    if (!(f.first() == g.first()) || !(f.second() == g.second()))
        throw std::invalid_argument("phase-space star product: factor mismatch");
    PhaseSpacePoly r(f.first(), f.second());
    std::vector<StarTerm> b1, b2;
    for (const auto& [ka, ca] : f.terms())
        for (const auto& [kb, cb] : g.terms()) {
            star_monomials(ka.first, kb.first, f.first().convention, b1);
            star_monomials(ka.second, kb.second, f.second().convention, b2);
            const QRatio cab = ca * cb;
            for (const auto& t1 : b1)
                for (const auto& t2 : b2) r.add_term(t1.exp, t2.exp, cab * QRatio(t1.coeff * t2.coeff));
        }
    return r;
}

PhaseSpacePoly star_second_right(const PhaseSpacePoly& f, const CoordPoly& h) {
    if (f.second().sector != h.sector() || f.second().convention != h.convention())
        throw std::invalid_argument("star_second_right: factor mismatch");
    PhaseSpacePoly r(f.first(), f.second());
    std::vector<StarTerm> buf;
    for (const auto& [k, c] : f.terms())
        for (const auto& [e, ch] : h.terms()) {
            star_monomials(k.second, e, h.convention(), buf);
            const QRatio cc = c * ch;
            for (auto& t : buf) r.add_term(k.first, t.exp, cc * QRatio(t.coeff));
        }
    return r;
}

PhaseSpacePoly star_second_left(const CoordPoly& h, const PhaseSpacePoly& f) {
    if (f.second().sector != h.sector() || f.second().convention != h.convention())
        throw std::invalid_argument("star_second_left: factor mismatch");
    PhaseSpacePoly r(f.first(), f.second());
    std::vector<StarTerm> buf;
    for (const auto& [k, c] : f.terms())
        for (const auto& [e, ch] : h.terms()) {
            star_monomials(e, k.second, h.convention(), buf);
            const QRatio cc = c * ch;
            for (auto& t : buf) r.add_term(k.first, t.exp, cc * QRatio(t.coeff));
        }
    return r;
}

namespace {

// conj of one monomial: swaps the outer variables and returns the q-power
// factor (-q)^n with n = e0 - e2 in the position sector, e2 - e0 in the
// momentum sector.
QScalar conj_factor(Sector s, const Exp4& e, Exp4& swapped) {
    swapped = {e[2], e[1], e[0], e[3]};
    const int n = s == Sector::X ? e[0] - e[2] : e[2] - e[0];
    QScalar f = QScalar::q_pow(n);
    return (n % 2 != 0) ? -f : f;
}

}  // namespace

CoordPoly conjugate(const CoordPoly& f) {
    CoordPoly r(f.sector(), f.convention());
    Exp4 sw{};
    for (const auto& [e, c] : f.terms()) {
        QScalar fac = conj_factor(f.sector(), e, sw);
        r.add_term(sw, c.conj() * QRatio(fac));
    }
    return r;
}

PhaseSpacePoly conjugate(const PhaseSpacePoly& f) {
    PhaseSpacePoly r(f.first(), f.second());
    Exp4 s1{}, s2{};
    for (const auto& [k, c] : f.terms()) {
        QScalar fac = conj_factor(f.first().sector, k.first, s1) * conj_factor(f.second().sector, k.second, s2);
        r.add_term(s1, s2, c.conj() * QRatio(fac));
    }
    return r;
}

namespace {
Convention flipped(Convention c) { return c == Convention::W ? Convention::Wt : Convention::W; }
}  // namespace

CoordPoly substitute_bar(const CoordPoly& f) {
    CoordPoly r(f.sector(), flipped(f.convention()));
    for (const auto& [e, c] : f.terms()) r.add_term({e[2], e[1], e[0], e[3]}, c.substitute_inverse());
    return r;
}

PhaseSpacePoly substitute_bar(const PhaseSpacePoly& f) {
    PhaseSpacePoly r({f.first().sector, flipped(f.first().convention)},
                     {f.second().sector, flipped(f.second().convention)});
    for (const auto& [k, c] : f.terms())
        r.add_term({k.first[2], k.first[1], k.first[0], k.first[3]},
                   {k.second[2], k.second[1], k.second[0], k.second[3]}, c.substitute_inverse());
    return r;
}

CoordPoly coordinate(Sector s, Convention c, Index a, bool upper) {
    if (a == Index::Zero) return CoordPoly::variable(s, c, 3);
    // Natural storage index of the index A: position x^A, momentum p_A.
    auto natural = [s](Index b) {
        if (b == Index::Three) return 1;
        if (s == Sector::X) return b == Index::Plus ? 0 : 2;
        return b == Index::Minus ? 0 : 2;
    };
    const bool is_natural = (s == Sector::X) ? upper : !upper;
    if (is_natural) return CoordPoly::variable(s, c, natural(a));
    const Index b = metric_partner(a);
    return CoordPoly::variable(s, c, natural(b)) * QRatio(metric(a, b));
}

IndexedTriple lower_index(const IndexedTriple& v) {
    IndexedTriple out;
    for (int a = 0; a < 3; ++a) {
        const Index A = kSpatialIndices[a];
        const Index B = metric_partner(A);
        const int b = B == Index::Plus ? 0 : (B == Index::Three ? 1 : 2);
        out[static_cast<size_t>(a)] = v[static_cast<size_t>(b)] * QRatio(metric(A, B));
    }
    return out;
}

IndexedTriple raise_index(const IndexedTriple& v) {
    // g^{AB} = g_{AB}, so raising uses the same table.
    return lower_index(v);
}

CoordPoly metric_contract(const IndexedTriple& v_upper, const IndexedTriple& w_lower) {
    CoordPoly r;
    for (size_t a = 0; a < 3; ++a) r += star_product(v_upper[a], w_lower[a]);
    return r;
}

CoordPoly momentum_square(Convention c) {
    IndexedTriple up, low;
    for (size_t a = 0; a < 3; ++a) {
        up[a] = coordinate(Sector::P, c, kSpatialIndices[a], true);
        low[a] = coordinate(Sector::P, c, kSpatialIndices[a], false);
    }
    return metric_contract(up, low);
}

}  // namespace qe
