#include <stdexcept>

#include "qeuclid/qcalculus.hpp"

namespace qe {

namespace {

bool is_spatial(Index a) { return a != Index::Zero; }

QRatio q6(int sign) { return QRatio(QScalar::q_pow(6 * sign)); }

void require_convention(const CoordPoly& f, Convention c, const DerivativeLabel& label) {
    if (!f.is_zero() && f.convention() != c)
        throw std::invalid_argument("derivative " + label.to_string() + " requires " + convention_name(c) +
                                    "-ordered input");
}

// Slot exponents of a monomial in a frame.
struct SlotExp {
    int a1, a2, a3;
};
SlotExp slots_of(const Exp4& e, const SlotFrame& fr) { return {e[fr.var[0]], e[fr.var[1]], e[fr.var[2]]}; }
Exp4 exp_of(const SlotExp& s, int t, const SlotFrame& fr) {
    Exp4 e{};
    e[fr.var[0]] = s.a1;
    e[fr.var[1]] = s.a2;
    e[fr.var[2]] = s.a3;
    e[3] = t;
    return e;
}

int slot_of(const SlotFrame& fr, int var) {
    for (int s = 0; s < 3; ++s)
        if (fr.var[static_cast<size_t>(s)] == var) return s;
    throw std::logic_error("variable not in frame");
}

QScalar lambda_q(int qs) { return qs > 0 ? lambda() : -lambda(); }

}  // namespace

Convention DerivativeLabel::required_convention() const {
    return (side == ActionSide::Left || side == ActionSide::RightBar) ? Convention::W : Convention::Wt;
}

std::string DerivativeLabel::to_string() const {
    std::string s = variant == DerivVariant::Plain ? "d" : "dhat";
    s += upper ? "^" : "_";
    s += index_name(index);
    switch (side) {
        case ActionSide::Left: return s + " |>";
        case ActionSide::LeftBar: return s + " |>bar";
        case ActionSide::Right: return "<| " + s;
        case ActionSide::RightBar: return "<|bar " + s;
    }
    return s;
}

DerivativeLabel d_left(Index a, bool upper) { return {a, DerivVariant::Plain, ActionSide::Left, upper}; }
DerivativeLabel dhat_leftbar(Index a, bool upper) { return {a, DerivVariant::Hat, ActionSide::LeftBar, upper}; }
DerivativeLabel d_rightbar(Index a, bool upper) { return {a, DerivVariant::Plain, ActionSide::RightBar, upper}; }
DerivativeLabel dhat_right(Index a, bool upper) { return {a, DerivVariant::Hat, ActionSide::Right, upper}; }

int natural_variable(Sector s, Index a) {
    if (a == Index::Zero) {
        if (s == Sector::P) throw std::invalid_argument("the momentum sector has no time derivative");
        return 3;
    }
    if (a == Index::Three) return 1;
    if (s == Sector::X) return a == Index::Plus ? 0 : 2;
    return a == Index::Minus ? 0 : 2;
}

bool natural_is_upper(Sector s) { return s == Sector::P; }

CoordPoly jackson_derivative(const CoordPoly& f, int var, int k) {
    if (k == 0) throw std::invalid_argument("jackson_derivative: k must be nonzero");
    if (var < 0 || var > 3) throw std::invalid_argument("jackson_derivative: bad variable");
    CoordPoly r(f.sector(), f.convention());
    for (const auto& [e, c] : f.terms()) {
        const int n = e[static_cast<size_t>(var)];
        if (n == 0) continue;
        Exp4 e2 = e;
        --e2[static_cast<size_t>(var)];
        r.add_term(e2, c * QRatio(q_number(n, k)));
    }
    return r;
}

CoordPoly frame_derivative(const CoordPoly& f, int var) {
    CoordPoly r(f.sector(), f.convention());
    if (var == 3) {
        for (const auto& [e, c] : f.terms()) {
            if (e[3] == 0) continue;
            Exp4 e2 = e;
            --e2[3];
            r.add_term(e2, c * QRatio(static_cast<long>(e[3])));
        }
        return r;
    }
    const SlotFrame fr = slot_frame(f.convention());
    const int qs = fr.qsign;
    const int slot = slot_of(fr, var);
    for (const auto& [e, c] : f.terms()) {
        const SlotExp s = slots_of(e, fr);
        if (slot == 0) {
            if (s.a1 == 0) continue;
            r.add_term(exp_of({s.a1 - 1, s.a2, s.a3}, e[3], fr), c * QRatio(q_number(s.a1, 4 * qs)));
        } else if (slot == 1) {
            if (s.a2 == 0) continue;
            r.add_term(exp_of({s.a1, s.a2 - 1, s.a3}, e[3], fr),
                       c * QRatio(q_number(s.a2, 2 * qs).shifted(2 * qs * s.a1)));
        } else {
            if (s.a3 > 0)
                r.add_term(exp_of({s.a1, s.a2, s.a3 - 1}, e[3], fr),
                           c * QRatio(q_number(s.a3, 4 * qs).shifted(2 * qs * s.a2)));
            if (s.a2 >= 2)
                r.add_term(exp_of({s.a1 + 1, s.a2 - 2, s.a3}, e[3], fr),
                           c * QRatio(lambda_q(qs) * q_number(s.a2, 2 * qs) * q_number(s.a2 - 1, 2 * qs)));
        }
    }
    return r;
}

namespace {

// Left action in the natural family of the operand's convention, with the
// index position resolved through the metric.
CoordPoly natural_left(const CoordPoly& f, Index a, bool upper) {
    if (a == Index::Zero) return frame_derivative(f, 3);
    if (upper == natural_is_upper(f.sector())) return frame_derivative(f, natural_variable(f.sector(), a));
    const Index b = metric_partner(a);
    return frame_derivative(f, natural_variable(f.sector(), b)) * QRatio(metric(a, b));
}

}  // namespace

CoordPoly apply_derivative(const DerivativeLabel& label, const CoordPoly& f) {
    require_convention(f, label.required_convention(), label);
    if (f.is_zero()) return CoordPoly(f.sector(), label.required_convention());
    const bool scale = is_spatial(label.index);
    switch (label.side) {
        case ActionSide::Left: {
            CoordPoly r = natural_left(f, label.index, label.upper);
            if (scale && label.variant == DerivVariant::Hat) r *= q6(+1);
            return r;
        }
        case ActionSide::LeftBar: {
            CoordPoly r = natural_left(f, label.index, label.upper);
            if (scale && label.variant == DerivVariant::Plain) r *= q6(-1);
            return r;
        }
        case ActionSide::RightBar: {
            // f <|bar d^A = -conj(d_A |> conj f), and likewise with the index lowered.
            CoordPoly r = -conjugate(natural_left(conjugate(f), label.index, !label.upper));
            if (scale && label.variant == DerivVariant::Hat) r *= q6(+1);
            return r;
        }
        case ActionSide::Right: {
            CoordPoly r = -conjugate(natural_left(conjugate(f), label.index, !label.upper));
            if (scale && label.variant == DerivVariant::Plain) r *= q6(-1);
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

PhaseSpacePoly apply_derivative_first(const DerivativeLabel& label, const PhaseSpacePoly& f) {
    PhaseSpacePoly r(f.first(), f.second());
    for (const auto& [e2, part] : f.by_second()) {
        CoordPoly d = apply_derivative(label, part);
        for (const auto& [e1, c] : d.terms()) r.add_term(e1, e2, c);
    }
    return r;
}

namespace {

CoordPoly slot_inverse(const CoordPoly& f, int var) {
    CoordPoly r(f.sector(), f.convention());
    if (var == 3) {
        for (const auto& [e, c] : f.terms()) {
            Exp4 e2 = e;
            ++e2[3];
            r.add_term(e2, c * QRatio(GaussRat::ratio(1, e[3] + 1)));
        }
        return r;
    }
    const SlotFrame fr = slot_frame(f.convention());
    const int qs = fr.qsign;
    const int slot = slot_of(fr, var);
    if (slot == 0) {
        for (const auto& [e, c] : f.terms()) {
            const SlotExp s = slots_of(e, fr);
            r.add_term(exp_of({s.a1 + 1, s.a2, s.a3}, e[3], fr), c * QRatio::inverse_q_number(s.a1 + 1, 4 * qs));
        }
        return r;
    }
    if (slot == 1) {
        for (const auto& [e, c] : f.terms()) {
            const SlotExp s = slots_of(e, fr);
            r.add_term(exp_of({s.a1, s.a2 + 1, s.a3}, e[3], fr),
                       c * QRatio::inverse_q_number(s.a2 + 1, 2 * qs).shifted(-2 * qs * s.a1));
        }
        return r;
    }
    // Slot 3: classical part C = D_{Q^4,y3} o (y2 -> Q^2 y2), correction
    // R = lambda_Q y1 D^2_{Q^2,y2}; (C + R)^{-1} = sum_k (-C^{-1} R)^k C^{-1}.
    auto c_inv = [&](const CoordPoly& g) {
        CoordPoly out(g.sector(), g.convention());
        for (const auto& [e, c] : g.terms()) {
            const SlotExp s = slots_of(e, fr);
            out.add_term(exp_of({s.a1, s.a2, s.a3 + 1}, e[3], fr),
                         c * QRatio::inverse_q_number(s.a3 + 1, 4 * qs).shifted(-2 * qs * s.a2));
        }
        return out;
    };
    auto minus_r = [&](const CoordPoly& g) {
        CoordPoly out(g.sector(), g.convention());
        for (const auto& [e, c] : g.terms()) {
            const SlotExp s = slots_of(e, fr);
            if (s.a2 < 2) continue;
            out.add_term(exp_of({s.a1 + 1, s.a2 - 2, s.a3}, e[3], fr),
                         c * QRatio(-lambda_q(qs) * q_number(s.a2, 2 * qs) * q_number(s.a2 - 1, 2 * qs)));
        }
        return out;
    };
    CoordPoly term = c_inv(f);
    while (!term.is_zero()) {
        r += term;
        term = c_inv(minus_r(term));
    }
    return r;
}

}  // namespace

CoordPoly inverse_partial(const DerivativeLabel& label, const CoordPoly& f) {
    if (label.side != ActionSide::Left && label.side != ActionSide::LeftBar)
        throw std::invalid_argument("inverse_partial supports left actions only");
    require_convention(f, label.required_convention(), label);
    if (f.is_zero()) return CoordPoly(f.sector(), label.required_convention());
    CoordPoly r;
    if (label.index == Index::Zero) {
        r = slot_inverse(f, 3);
    } else if (label.upper == natural_is_upper(f.sector())) {
        r = slot_inverse(f, natural_variable(f.sector(), label.index));
    } else {
        // (g^{AB} d_B)^{-1} = (g^{AB})^{-1} d_B^{-1}; the metric entries are -q^{+-1}.
        const Index b = metric_partner(label.index);
        QScalar g = metric(label.index, b);
        QScalar ginv = label.index == Index::Three ? QScalar(1) : -QScalar::q_pow(-g.min_exponent());
        r = slot_inverse(f, natural_variable(f.sector(), b)) * QRatio(ginv);
    }
    if (is_spatial(label.index)) {
        const bool left = label.side == ActionSide::Left;
        if (left && label.variant == DerivVariant::Hat) r *= q6(-1);
        if (!left && label.variant == DerivVariant::Plain) r *= q6(+1);
    }
    return r;
}

}  // namespace qe
