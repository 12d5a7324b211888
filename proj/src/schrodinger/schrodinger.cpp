#include "qeuclid/schrodinger.hpp"

#include <stdexcept>

#include "qeuclid/ncalgebra.hpp"

namespace qe {

namespace {

QScalar i_unit() { return QScalar::i_unit(); }

GaussRat inverse_factorial(int k) {
    mpq_class f(1);
    for (int j = 2; j <= k; ++j) f *= j;
    return {1 / f, mpq_class(0)};
}

GaussRat inverse_two_mass(const GaussRat& mass) { return (GaussRat(2) * mass).inverse(); }

GaussRat gpow(const GaussRat& g, int n) {
    GaussRat r(1);
    for (int j = 0; j < n; ++j) r *= g;
    return r;
}

}  // namespace

QScalar cq_coefficient(int k, int l) {
    if (l < 0 || k < 0 || l > k) throw std::invalid_argument("cq_coefficient: need 0 <= l <= k");
    return (-lambda_plus()).pow(static_cast<unsigned>(k - l)) * q_binomial(k, l, 4).shifted(-2 * l);
}

CoordPoly psq_power(int k, Convention c) {
    if (k < 0) throw std::invalid_argument("psq_power: negative power");
    CoordPoly w(Sector::P, Convention::W);
    for (int l = 0; l <= k; ++l) w.add_term({k - l, 2 * l, k - l, 0}, QRatio(cq_coefficient(k, l)));
    return c == Convention::W ? w : convert_convention(w, c);
}

CoordPoly reordered_psq_product(int k, int a, int b, int c) {
    CoordPoly r(Sector::P, Convention::W);
    for (int l = 0; l <= k; ++l)
        r.add_term({a + k - l, b + 2 * l, c + k - l, 0}, QRatio(cq_coefficient(k, l).shifted(2 * b * (k - l))));
    return r;
}

PhaseSpacePoly phase_factor(PhaseSign s, int K, const GaussRat& mass, Convention c) {
    if (K < 0) throw std::invalid_argument("phase_factor: negative order");
    const GaussRat step = (s == PhaseSign::Plus ? GaussRat::i_unit() : -GaussRat::i_unit()) * inverse_two_mass(mass);
    PhaseSpacePoly r({Sector::X, c}, {Sector::P, c});
    for (int k = 0; k <= K; ++k) {
        const GaussRat w = gpow(step, k) * inverse_factorial(k);
        const CoordPoly pk = psq_power(k, c);
        for (const auto& [e, v] : pk.terms()) r.add_term({0, 0, 0, k}, e, v * QRatio(w));
    }
    return r;
}

CoordPoly phase_factor_at(PhaseSign s, int K, const GaussRat& mass, const GaussRat& t, Convention c) {
    if (K < 0) throw std::invalid_argument("phase_factor_at: negative order");
    const GaussRat step =
        (s == PhaseSign::Plus ? GaussRat::i_unit() : -GaussRat::i_unit()) * t * inverse_two_mass(mass);
    CoordPoly r(Sector::P, c);
    for (int k = 0; k <= K; ++k) r += psq_power(k, c) * QRatio(gpow(step, k) * inverse_factorial(k));
    return r;
}

Hamiltonian::Hamiltonian(GaussRat mass) : mass_(std::move(mass)) {
    if (sgn(mass_.im) != 0 || sgn(mass_.re) <= 0) throw std::invalid_argument("Hamiltonian: mass must be positive");
}

CoordPoly Hamiltonian::apply(const CoordPoly& f, ActionSide side) const {
    const bool left = side == ActionSide::Left || side == ActionSide::LeftBar;
    CoordPoly sum(f.sector(), f.convention());
    for (Index a : kSpatialIndices) {
        const DerivativeLabel first{a, DerivVariant::Plain, side, !left};
        const DerivativeLabel second{a, DerivVariant::Plain, side, left};
        sum += apply_derivative(second, apply_derivative(first, f));
    }
    return sum * QRatio(-inverse_two_mass(mass_));
}

PhaseSpacePoly Hamiltonian::apply_first(const PhaseSpacePoly& f, ActionSide side) const {
    PhaseSpacePoly r(f.first(), f.second());
    for (const auto& [e2, part] : f.by_second()) {
        const CoordPoly h = apply(part, side);
        for (const auto& [e1, c] : h.terms()) r.add_term(e1, e2, c);
    }
    return r;
}

std::string family_name(WaveFamily f) {
    switch (f) {
        case WaveFamily::Lower: return "u_p";
        case WaveFamily::Upper: return "u^p";
        case WaveFamily::StarLower: return "ustar_p";
        case WaveFamily::StarUpper: return "ustar^p";
    }
    return "?";
}

WaveFamily parse_family(const std::string& s) {
    for (WaveFamily f : kAllFamilies)
        if (family_name(f) == s) return f;
    throw std::invalid_argument("unknown plane-wave family '" + s + "'");
}

PlaneWave build_plane_wave(WaveFamily family, int N, int K, const GaussRat& mass) {
    if (N < 0 || K < 0) throw std::invalid_argument("build_plane_wave: negative truncation");
    PlaneWave w{family, N, K, mass, {}};
    switch (family) {
        case WaveFamily::Lower:
        case WaveFamily::Upper:
            w.body = star_product(build_exponential(ExpVariant::XP, N).body,
                                  phase_factor(PhaseSign::Minus, K, mass, Convention::W));
            break;
        case WaveFamily::StarLower:
        case WaveFamily::StarUpper:
            w.body = star_product(phase_factor(PhaseSign::Plus, K, mass, Convention::Wt),
                                  build_exponential(ExpVariant::StarPX, N).body);
            break;
    }
    if (family == WaveFamily::Upper || family == WaveFamily::StarUpper) w.body = conjugate(w.body);
    return w;
}

PhaseSpacePoly closed_form_plane_wave(int N, int K, const GaussRat& mass) {
    PhaseSpacePoly r({Sector::X, Convention::W}, {Sector::P, Convention::W});
    const GaussRat itm = GaussRat::i_unit() * inverse_two_mass(mass);  // i/(2m), paired with t
    for (int np = 0; np <= N; ++np)
        for (int n3 = 0; np + n3 <= N; ++n3)
            for (int nm = 0; np + n3 + nm <= N; ++nm)
                for (int k = 0; k <= K; ++k)
                    for (int l = 0; l <= k; ++l) {
                        const int pm = nm + k - l, p3 = n3 + 2 * l, pp = np + k - l;
                        QScalar c = (-lambda_plus()).pow(static_cast<unsigned>(k - l)) * q_binomial(k, l, 4);
                        c = c.shifted(-2 * l + 2 * n3 * (k - l));
                        c *= gpow(itm, k) * inverse_factorial(k);
                        const int ipow = pm + p3 + pp;
                        c *= gpow(GaussRat::i_unit(), ipow % 4);
                        const QRatio fac = QRatio::inverse_q_factorial(np, 4) * QRatio::inverse_q_factorial(n3, 2) *
                                           QRatio::inverse_q_factorial(nm, 4);
                        r.add_term({np, n3, nm, k}, {pm, p3, pp, 0}, fac * QRatio(c));
                    }
    return r;
}

namespace {

struct FamilySides {
    ActionSide side;
    bool momentum_upper;  // p^A (true) or p_A in the momentum eigenvalue equation
    bool star_on_left;    // momentum factor multiplies from the left
};

FamilySides sides_of(WaveFamily f) {
    switch (f) {
        case WaveFamily::Lower: return {ActionSide::Left, false, false};
        case WaveFamily::StarLower: return {ActionSide::Right, false, true};
        case WaveFamily::Upper: return {ActionSide::RightBar, true, true};
        case WaveFamily::StarUpper: return {ActionSide::LeftBar, true, false};
    }
    throw std::logic_error("unreachable");
}

PhaseSpacePoly multiply_momentum(const PlaneWave& w, const CoordPoly& m, bool on_left) {
    return on_left ? star_second_left(m, w.body) : star_second_right(w.body, m);
}

}  // namespace

PhaseSpacePoly schrodinger_residual(const PlaneWave& w) {
    const FamilySides fs = sides_of(w.family);
    const DerivativeLabel dt{Index::Zero, DerivVariant::Plain, fs.side, false};
    const PhaseSpacePoly time_part = apply_derivative_first(dt, w.body) * QRatio(i_unit());
    return time_part - Hamiltonian(w.mass).apply_first(w.body, fs.side);
}

PhaseSpacePoly momentum_residual(const PlaneWave& w, Index a) {
    if (a == Index::Zero) throw std::invalid_argument("momentum_residual: spatial index expected");
    const FamilySides fs = sides_of(w.family);
    const DerivativeLabel d{a, DerivVariant::Plain, fs.side, fs.momentum_upper};
    const PhaseSpacePoly lhs = apply_derivative_first(d, w.body) * QRatio(-i_unit());
    const CoordPoly p = coordinate(Sector::P, w.body.second().convention, a, fs.momentum_upper);
    return lhs - multiply_momentum(w, p, fs.star_on_left);
}

PhaseSpacePoly energy_residual(const PlaneWave& w) {
    const FamilySides fs = sides_of(w.family);
    const CoordPoly p2 = psq_power(1, w.body.second().convention) * QRatio(inverse_two_mass(w.mass));
    return Hamiltonian(w.mass).apply_first(w.body, fs.side) - multiply_momentum(w, p2, fs.star_on_left);
}

bool vanishes_below_shell(const PlaneWave& w, const PhaseSpacePoly& r) {
    if (w.N < 2 || w.K < 1) return true;
    return r.truncated_first(w.N - 2, w.K - 1).is_zero();
}

std::string propagator_family_name(PropagatorFamily f) {
    switch (f) {
        case PropagatorFamily::KR: return "KR";
        case PropagatorFamily::KL: return "KL";
        case PropagatorFamily::KRStar: return "KR*";
        case PropagatorFamily::KLStar: return "KL*";
    }
    return "?";
}

PropagatorFamily parse_propagator_family(const std::string& s) {
    for (PropagatorFamily f :
         {PropagatorFamily::KR, PropagatorFamily::KL, PropagatorFamily::KRStar, PropagatorFamily::KLStar})
        if (propagator_family_name(f) == s) return f;
    throw std::invalid_argument("unknown propagator family '" + s + "'");
}

std::string branch_name(Branch b) { return b == Branch::Retarded ? "retarded" : "advanced"; }

Branch parse_branch(const std::string& s) {
    if (s == "retarded" || s == "+") return Branch::Retarded;
    if (s == "advanced" || s == "-") return Branch::Advanced;
    throw std::invalid_argument("unknown propagator branch '" + s + "'");
}

namespace {

int sigma_of(PropagatorFamily f) { return f == PropagatorFamily::KR || f == PropagatorFamily::KRStar ? 1 : -1; }

Convention convention_of(PropagatorFamily f) {
    return f == PropagatorFamily::KR || f == PropagatorFamily::KL ? Convention::W : Convention::Wt;
}

QScalar branch_unit(Branch b) { return b == Branch::Retarded ? QScalar::i_unit() : -QScalar::i_unit(); }

}  // namespace

MomentumPropagator propagator_momentum(PropagatorFamily f, Branch b, int K, const GaussRat& mass) {
    if (K < 0) throw std::invalid_argument("propagator_momentum: negative order");
    MomentumPropagator prop{f, b, K, mass, {}, {}};
    const GaussRat step = GaussRat(sigma_of(f)) * inverse_two_mass(mass);
    for (int k = 0; k <= K; ++k) {
        const QScalar s = branch_unit(b) * gpow(step, k);
        prop.scalars.push_back(s);
        prop.series[-(k + 1)] = psq_power(k, convention_of(f)) * QRatio(s);
    }
    return prop;
}

SSeries propagator_identity_residual(const MomentumPropagator& k, bool p2_on_left) {
    const Convention c = convention_of(k.family);
    const CoordPoly p2 = psq_power(1, c) * QRatio(GaussRat(sigma_of(k.family)) * inverse_two_mass(k.mass));
    SSeries r;
    auto add = [&r, c](int n, const CoordPoly& v) {
        auto it = r.try_emplace(n, Sector::P, c).first;
        it->second += v;
    };
    for (const auto& [n, coeff] : k.series) {
        add(n + 1, coeff);  // S * K
        add(n, -(p2_on_left ? star_product(p2, coeff) : star_product(coeff, p2)));
    }
    add(0, CoordPoly::constant(Sector::P, c, QRatio(-branch_unit(k.branch))));
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

bool propagator_identity_holds(const MomentumPropagator& k) {
    for (bool left : {true, false})
        for (const auto& [n, v] : propagator_identity_residual(k, left))
            if (!v.truncated(2 * k.order).is_zero()) return false;
    return true;
}

}  // namespace qe
