#include <cmath>
#include <stdexcept>

#include "qeuclid/schrodinger.hpp"

namespace qe {

namespace {

constexpr double kNormTolerance = 1e-8;

LatticeFn psq_samples(const QLattice& lat) {
    return LatticeFn::from_poly(lat, NumPoly::from(psq_power(1), lat.q0));
}

// exp(sign * i t p^2 / 2m) sampled on the lattice.
LatticeFn phase_samples(const QLattice& lat, double t, double mass, int sign) {
    LatticeFn phase = psq_samples(lat);
    for (cplx& v : phase.values()) v = std::exp(cplx(0.0, sign * t * v.real() / (2.0 * mass)));
    return phase;
}

void require_normalized(const WavePacket& wp) {
    const double err = norm_check(wp);
    if (!(err <= kNormTolerance))
        throw std::domain_error("wave packet is not normalized (norm error " + std::to_string(err) + ")");
}

cplx half_sum(const LatticeFn& a, const LatticeFn& b) {
    return 0.5 * (integral_all_space(a).value + integral_all_space(b).value);
}

}  // namespace

WavePacket WavePacket::gaussian(const QLattice& lat, double mass, const std::array<double, 3>& center, double width,
                                const std::array<double, 3>& wave_vector, int support) {
    if (!(width > 0.0)) throw std::invalid_argument("gaussian packet: width must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("gaussian packet: mass must be positive");
    lat.validate();
    LatticeFn c(lat, Sector::P, Convention::W);
    const int n = lat.per_axis();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                const int idx[3] = {a, b, d};
                double r2 = 0.0, phase = 0.0;
                bool inside = true;
                for (int v = 0; v < 3; ++v) {
                    inside = inside && std::abs(lat.exponent_of(idx[v])) <= support;
                    const double y = lat.coordinate(idx[v]);
                    r2 += (y - center[static_cast<size_t>(v)]) * (y - center[static_cast<size_t>(v)]);
                    phase += wave_vector[static_cast<size_t>(v)] * y;
                }
                if (inside) c.at(a, b, d) = std::exp(-r2 / (2.0 * width * width)) * std::exp(cplx(0.0, phase));
            }
    WavePacket wp;
    wp.c_lower = c;
    wp.c_star_lower = c;
    for (cplx& v : wp.c_star_lower.values()) v = std::conj(v);
    wp.mass = mass;
    return wp;
}

WavePacket WavePacket::at_time(double t) const {
    WavePacket r = *this;
    const QLattice& lat = c_lower.lattice();
    r.c_lower = c_lower.pointwise(phase_samples(lat, t, mass, -1));
    r.c_star_lower = c_star_lower.pointwise(phase_samples(lat, t, mass, +1));
    r.time = time + t;
    return r;
}

WavePacket WavePacket::normalized() const {
    const cplx nrm = norm_integral(*this);
    if (!(std::abs(nrm) > 1e-300)) throw std::domain_error("cannot normalize a zero wave packet");
    if (!(nrm.real() > 0.0) || std::abs(nrm.imag()) > 1e-9 * std::abs(nrm))
        throw std::domain_error("normalization integral is not positive");
    WavePacket r = *this;
    const cplx s(1.0 / std::sqrt(nrm.real()), 0.0);
    r.c_lower *= s;
    r.c_star_lower *= s;
    return r;
}

cplx norm_integral(const WavePacket& wp) {
    return half_sum(wp.c_star_lower.pointwise(wp.c_lower), wp.c_upper().pointwise(wp.c_star_upper()));
}

double norm_check(const WavePacket& wp) { return std::abs(1.0 - norm_integral(wp)); }

cplx expectation_momentum(const WavePacket& wp, Index a, bool upper) {
    if (a == Index::Zero) throw std::invalid_argument("expectation_momentum: spatial index expected");
    require_normalized(wp);
    const LatticeFn p = LatticeFn::from_poly(
        wp.c_lower.lattice(), NumPoly::from(coordinate(Sector::P, Convention::W, a, upper), wp.c_lower.lattice().q0));
    return half_sum(wp.c_star_lower.pointwise(p).pointwise(wp.c_lower),
                    wp.c_upper().pointwise(p).pointwise(wp.c_star_upper()));
}

cplx expectation_position(const WavePacket& wp, Index a, bool upper) {
    if (a == Index::Zero) throw std::invalid_argument("expectation_position: spatial index expected");
    require_normalized(wp);
    const cplx i(0.0, 1.0);
    const DerivativeLabel left{a, DerivVariant::Plain, ActionSide::LeftBar, upper};
    const DerivativeLabel right{a, DerivVariant::Plain, ActionSide::Right, upper};
    // The coefficient functions carry no ordering of their own; the derivative
    // frames are attached by relabeling.
    const LatticeFn dc = apply_derivative(left, wp.c_lower.with_convention(Convention::Wt)).with_convention(Convention::W);
    const LatticeFn cd =
        apply_derivative(right, wp.c_upper().with_convention(Convention::Wt)).with_convention(Convention::W);
    return half_sum(wp.c_star_lower.pointwise(dc * i), (cd * i).pointwise(wp.c_star_upper()));
}

}  // namespace qe
