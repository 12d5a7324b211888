#include "qeuclid/qexp.hpp"

#include <stdexcept>

namespace qe {

namespace {

QScalar i_power(int n) {
    static const GaussRat units[4] = {GaussRat(1), GaussRat::i_unit(), GaussRat(-1), -GaussRat::i_unit()};
    return QScalar(units[((n % 4) + 4) % 4]);
}

QRatio inverse_factorials(int n_plus, int n_three, int n_minus) {
    return QRatio::inverse_q_factorial(n_plus, 4) * QRatio::inverse_q_factorial(n_three, 2) *
           QRatio::inverse_q_factorial(n_minus, 4);
}

// 1/[[2k]]!! = 1/([[2]] [[4]] ... [[2k]]) in base q^b.
QRatio inverse_double_factorial(int k, int base) {
    QRatio r(1);
    for (int j = 1; j <= k; ++j) r *= QRatio::inverse_q_number(2 * j, base);
    return r;
}

PhaseSpacePoly plain_exponential(int order, bool position_first) {
    PhaseSpacePoly e({Sector::X, Convention::W}, {Sector::P, Convention::W});
    for (int np = 0; np <= order; ++np)
        for (int n3 = 0; np + n3 <= order; ++n3)
            for (int nm = 0; np + n3 + nm <= order; ++nm) {
                const int n = np + n3 + nm;
                const QRatio fac = inverse_factorials(np, n3, nm);
                if (position_first) {
                    // (x+)^n+ (x3)^n3 (x-)^n- (i p-)^n- (i p3)^n3 (i p+)^n+
                    e.add_term({np, n3, nm, 0}, {nm, n3, np, 0}, fac * QRatio(i_power(n)));
                } else {
                    // (p^+)^n+ (p^3)^n3 (p^-)^n- (x_-)^n- (x_3)^n3 (x_+)^n+ with
                    // p^+ = -q p_-, p^- = -p_+/q, x_- = -x^+/q, x_+ = -q x^-.
                    e.add_term({nm, n3, np, 0}, {np, n3, nm, 0},
                               fac * QRatio(i_power(-n) * QScalar::q_pow(2 * (np - nm))));
                }
            }
    return e;
}

PhaseSpacePoly rescale_momentum(const PhaseSpacePoly& e, int power_of_q) {
    PhaseSpacePoly r(e.first(), e.second());
    for (const auto& [k, c] : e.terms()) r.add_term(k.first, k.second, c.shifted(power_of_q * spatial_degree(k.second)));
    return r;
}

}  // namespace

std::string variant_name(ExpVariant v) {
    switch (v) {
        case ExpVariant::XP: return "xp";
        case ExpVariant::PX: return "px";
        case ExpVariant::XPBar: return "xpbar";
        case ExpVariant::PXBar: return "pxbar";
        case ExpVariant::StarPX: return "starpx";
        case ExpVariant::StarXP: return "starxp";
    }
    return "?";
}

ExpVariant parse_variant(const std::string& s) {
    for (ExpVariant v : kAllVariants)
        if (variant_name(v) == s) return v;
    throw std::invalid_argument("unknown exponential variant '" + s + "'");
}

QExponential build_exponential(ExpVariant v, int order) {
    if (order < 0) throw std::invalid_argument("build_exponential: negative order");
    QExponential e{v, order, {}};
    switch (v) {
        case ExpVariant::XP: e.body = plain_exponential(order, true); break;
        case ExpVariant::PX: e.body = plain_exponential(order, false); break;
        case ExpVariant::XPBar: e.body = substitute_bar(plain_exponential(order, true)); break;
        case ExpVariant::PXBar: e.body = substitute_bar(plain_exponential(order, false)); break;
        case ExpVariant::StarPX: e.body = rescale_momentum(substitute_bar(plain_exponential(order, false)), 6); break;
        case ExpVariant::StarXP: e.body = rescale_momentum(substitute_bar(plain_exponential(order, true)), 6); break;
    }
    return e;
}

PhaseSpacePoly eigen_residual(const QExponential& e, Index a) {
    if (a == Index::Zero) throw std::invalid_argument("eigen_residual: spatial index expected");
    const CoordPoly pa = coordinate(Sector::P, e.body.second().convention, a, true);
    const QRatio minus_i(-GaussRat::i_unit());
    const QRatio plus_i(GaussRat::i_unit());
    PhaseSpacePoly lhs, rhs;
    switch (e.variant) {
        case ExpVariant::XP:
            lhs = apply_derivative_first(d_left(a, true), e.body) * minus_i;
            rhs = star_second_right(e.body, pa);
            break;
        case ExpVariant::PX:
            lhs = apply_derivative_first(d_rightbar(a, true), e.body) * minus_i;
            rhs = star_second_left(pa, e.body);
            break;
        case ExpVariant::XPBar:
            lhs = apply_derivative_first(dhat_leftbar(a, true), e.body) * minus_i;
            rhs = star_second_right(e.body, pa);
            break;
        case ExpVariant::PXBar:
            lhs = apply_derivative_first(dhat_right(a, true), e.body) * minus_i;
            rhs = star_second_left(pa, e.body);
            break;
        case ExpVariant::StarPX:
            lhs = apply_derivative_first({a, DerivVariant::Plain, ActionSide::Right, true}, e.body);
            rhs = star_second_left(pa * plus_i, e.body);
            break;
        case ExpVariant::StarXP:
            lhs = apply_derivative_first({a, DerivVariant::Plain, ActionSide::LeftBar, true}, e.body);
            rhs = star_second_right(e.body, pa * plus_i);
            break;
    }
    return lhs - rhs;
}

bool vanishes_below_shell(const PhaseSpacePoly& r, int order) { return r.truncated_first(order - 1).is_zero(); }

CoordPoly exponential_at_zero_position(const QExponential& e) {
    CoordPoly r(e.body.second().sector, e.body.second().convention);
    for (const auto& [k, c] : e.body.terms())
        if (spatial_degree(k.first) == 0) r.add_term(k.second, c);
    return r;
}

CoordPoly exponential_at_zero_momentum(const QExponential& e) {
    CoordPoly r(e.body.first().sector, e.body.first().convention);
    for (const auto& [k, c] : e.body.terms())
        if (spatial_degree(k.second) == 0) r.add_term(k.first, c);
    return r;
}

namespace {

void require(const CoordPoly& f, Convention c, const char* what) {
    if (f.sector() != Sector::X) throw std::invalid_argument(std::string(what) + ": position-sector input expected");
    if (!f.is_zero() && f.convention() != c)
        throw std::invalid_argument(std::string(what) + ": expected " + convention_name(c) + "-ordered input");
    for (const auto& [e, v] : f.terms())
        if (e[3] != 0) throw std::invalid_argument(std::string(what) + ": time-dependent input");
}

}  // namespace

PhaseSpacePoly q_translate(const CoordPoly& f) {
    require(f, Convention::Wt, "q_translate");
    const Factor fac{Sector::X, Convention::Wt};
    PhaseSpacePoly r(fac, fac);
    const QScalar base = -(QScalar::q_pow(-1) * lambda() * lambda_plus());
    for (const auto& [e, coeff] : f.terms()) {
        const int a = e[0], b = e[1], c = e[2];
        for (int ip = 0; ip <= a; ++ip)
            for (int im = 0; im <= c; ++im)
                for (int i3 = 0; i3 <= b; ++i3)
                    for (int k = 0; k <= i3 && i3 + k <= b; ++k) {
                        QScalar num = base.pow(static_cast<unsigned>(k)) * q_falling(a, ip, -4) *
                                      q_falling(b, i3 + k, -2) * q_falling(c, im, -4);
                        num = num.shifted(2 * (k - i3) * (c - im) - 2 * ip * (b - i3 - k));
                        const QRatio w = QRatio(num) * inverse_double_factorial(k, -2) *
                                         QRatio::inverse_q_factorial(im, -4) *
                                         QRatio::inverse_q_factorial(i3 - k, -2) *
                                         QRatio::inverse_q_factorial(ip, -4);
                        r.add_term({ip + k, i3 - k, im, 0}, {a - ip, b - i3 - k, c - im + k, 0}, coeff * w);
                    }
    }
    return r;
}

PhaseSpacePoly q_translate_by_exponential(const CoordPoly& f, Translation t, WordOrder order) {
    const bool bar = t == Translation::PlusBar;
    const Convention conv = bar ? Convention::W : Convention::Wt;
    require(f, conv, "q_translate");
    const int degree = std::max(f.total_degree(), 0);
    const QExponential e = build_exponential(bar ? ExpVariant::XP : ExpVariant::XPBar, degree);
    const SlotFrame fr = slot_frame(e.body.second().convention);
    // Momentum storage variable -> index of the natural lower momentum p_A.
    const Index index_of_var[3] = {Index::Minus, Index::Three, Index::Plus};

    std::vector<Index> word;
    PhaseSpacePoly r({Sector::X, conv}, {Sector::X, conv});
    for (const auto& [key, c] : e.body.terms()) {
        word.clear();
        for (int s = 0; s < 3; ++s)
            for (int n = 0; n < key.second[static_cast<size_t>(fr.var[static_cast<size_t>(s)])]; ++n)
                word.push_back(index_of_var[fr.var[static_cast<size_t>(s)]]);
        CoordPoly g = f;
        auto apply = [&](Index a) { g = apply_derivative(bar ? d_left(a) : dhat_leftbar(a), g); };
        if (order == WordOrder::RightmostFirst)
            for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it) apply(*it);
        else
            for (auto it = word.begin(); it != word.end() && !g.is_zero(); ++it) apply(*it);
        // Each momentum carried a factor i that the derivative replaces.
        const QRatio w = c * QRatio(i_power(-spatial_degree(key.second)));
        for (const auto& [ey, cy] : g.terms()) r.add_term(key.first, ey, w * cy);
    }
    return r;
}

PhaseSpacePoly q_translate(const CoordPoly& f, Translation t) {
    return t == Translation::Plus ? q_translate(f) : q_translate_by_exponential(f, t);
}

CoordPoly u_operator(const CoordPoly& f) {
    require(f, Convention::W, "u_operator");
    CoordPoly r(Sector::X, Convention::Wt);
    for (const auto& [e, coeff] : f.terms()) {
        const int a = e[0], b = e[1], c = e[2];
        for (int k = 0; k <= std::min(a, c); ++k) {
            QScalar num = (-lambda()).pow(static_cast<unsigned>(k)) * q_falling(a, k, -4) * q_falling(c, k, -4);
            num = num.shifted(-2 * b * (a + c - k));
            r.add_term({a - k, b + 2 * k, c - k, 0}, coeff * QRatio(num) * QRatio::inverse_q_factorial(k, -4));
        }
    }
    return r;
}

CoordPoly u_inverse_operator(const CoordPoly& f) {
    require(f, Convention::Wt, "u_inverse_operator");
    CoordPoly r(Sector::X, Convention::W);
    for (const auto& [e, coeff] : f.terms()) {
        const int a = e[0], b = e[1], c = e[2];
        for (int k = 0; k <= std::min(a, c); ++k) {
            QScalar num = lambda().pow(static_cast<unsigned>(k)) * q_falling(a, k, 4) * q_falling(c, k, 4);
            num = num.shifted(2 * b * (a + c - k));
            r.add_term({a - k, b + 2 * k, c - k, 0}, coeff * QRatio(num) * QRatio::inverse_q_factorial(k, 4));
        }
    }
    return r;
}

namespace {

// The series for U^-1 f((-)x): W~-ordered input, W-ordered output.
CoordPoly inversion_series(const CoordPoly& f) {
    CoordPoly r(Sector::X, Convention::W);
    const QScalar base = -(QScalar::q_pow(1) * lambda() * lambda_plus());
    for (const auto& [e, coeff] : f.terms()) {
        const int a = e[0], b = e[1], c = e[2];
        for (int i = 0; 2 * i <= b; ++i) {
            // Arguments are listed in W~ order: x- -> -q^{2-4i} x-, x3 -> -q^{1-2i} x3,
            // x+ -> -q^{2-4i} x+. The number operators then act on D^{2i} of that.
            const int sign_exp = a + b + c;
            int qexp = (2 - 4 * i) * (a + c) + (1 - 2 * i) * b;
            const int np = a, n3 = b - 2 * i, nm = c;
            qexp += -2 * np * (np + n3) - 2 * nm * (nm + n3) - n3 * n3;
            QScalar num = base.pow(static_cast<unsigned>(i)) * q_falling(b, 2 * i, -2);
            num = num.shifted(qexp);
            if (sign_exp % 2 != 0) num = -num;
            r.add_term({np + i, n3, nm + i, 0}, coeff * QRatio(num) * inverse_double_factorial(i, -2));
        }
    }
    return r;
}

}  // namespace

CoordPoly q_invert(const CoordPoly& f, Translation t) {
    if (t == Translation::Plus) {
        require(f, Convention::Wt, "q_invert");
        return u_operator(inversion_series(f));
    }
    require(f, Convention::W, "q_invert");
    return substitute_bar(q_invert(substitute_bar(f), Translation::Plus));
}

CoordPoly antipode_left(const PhaseSpacePoly& delta, Translation t) {
    CoordPoly r(Sector::X, delta.first().convention);
    for (const auto& [ex, g] : delta.by_first())
        r += star_product(q_invert(CoordPoly::monomial(Sector::X, delta.first().convention, ex), t), g);
    return r;
}

CoordPoly antipode_right(const PhaseSpacePoly& delta, Translation t) {
    CoordPoly r(Sector::X, delta.first().convention);
    for (const auto& [ey, g] : delta.by_second())
        r += star_product(g, q_invert(CoordPoly::monomial(Sector::X, delta.second().convention, ey), t));
    return r;
}

CoordPoly counit(const CoordPoly& f) {
    return f.filtered([](const Exp4& e) { return e[0] == 0 && e[1] == 0 && e[2] == 0; });
}

CoordPoly set_second_zero(const PhaseSpacePoly& delta) {
    CoordPoly r(delta.first().sector, delta.first().convention);
    for (const auto& [k, c] : delta.terms())
        if (spatial_degree(k.second) == 0) r.add_term(k.first, c);
    return r;
}

CoordPoly set_first_zero(const PhaseSpacePoly& delta) {
    CoordPoly r(delta.second().sector, delta.second().convention);
    for (const auto& [k, c] : delta.terms())
        if (spatial_degree(k.first) == 0) r.add_term(k.second, c);
    return r;
}

void TriplePoly::add_term(const Exp4& a, const Exp4& b, const Exp4& c, const QRatio& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms.try_emplace({a, b, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool operator==(const TriplePoly& a, const TriplePoly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (const auto& [k, v] : a.terms) {
        auto it = b.terms.find(k);
        if (it == b.terms.end() || it->second != v) return false;
    }
    return true;
}

TriplePoly TriplePoly::truncated(int max_xy_degree) const {
    TriplePoly r;
    for (const auto& [k, v] : terms)
        if (spatial_degree(k[0]) + spatial_degree(k[1]) <= max_xy_degree) r.terms.emplace(k, v);
    return r;
}

TriplePoly addition_lhs(int order) {
    const QExponential e = build_exponential(ExpVariant::XP, order);
    TriplePoly r;
    for (const auto& [key, c] : e.body.terms()) {
        const PhaseSpacePoly shifted = q_translate_by_exponential(
            CoordPoly::monomial(Sector::X, Convention::W, key.first), Translation::PlusBar);
        for (const auto& [xy, d] : shifted.terms()) r.add_term(xy.first, xy.second, key.second, c * d);
    }
    return r.truncated(order);
}

TriplePoly addition_rhs(int order) {
    const QExponential e = build_exponential(ExpVariant::XP, order);
    TriplePoly r;
    std::vector<StarTerm> buf;
    for (const auto& [kx, cx] : e.body.terms())
        for (const auto& [ky, cy] : e.body.terms()) {
            if (spatial_degree(kx.first) + spatial_degree(ky.first) > order) continue;
            star_monomials(ky.second, kx.second, Convention::W, buf);
            for (const auto& t : buf) r.add_term(kx.first, ky.first, t.exp, cx * cy * QRatio(t.coeff));
        }
    return r;
}

PhaseSpacePoly inverse_exponential_product(int order) {
    const QExponential e = build_exponential(ExpVariant::XP, order);
    PhaseSpacePoly r({Sector::X, Convention::W}, {Sector::P, Convention::W});
    std::vector<StarTerm> buf;
    std::map<Exp4, CoordPoly> inverted;
    for (const auto& [k, c] : e.body.terms())
        inverted.emplace(k.first, q_invert(CoordPoly::monomial(Sector::X, Convention::W, k.first), Translation::PlusBar));
    for (const auto& [kx, cx] : e.body.terms())
        for (const auto& [ky, cy] : e.body.terms()) {
            if (spatial_degree(kx.first) + spatial_degree(ky.first) > order) continue;
            const CoordPoly xpart =
                star_product(CoordPoly::monomial(Sector::X, Convention::W, kx.first), inverted.at(ky.first));
            star_monomials(ky.second, kx.second, Convention::W, buf);
            for (const auto& [ex, vx] : xpart.terms())
                for (const auto& t : buf) r.add_term(ex, t.exp, cx * cy * vx * QRatio(t.coeff));
        }
    return r;
}

}  // namespace qe
