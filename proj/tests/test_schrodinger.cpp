#include <cmath>

#include "doctest.h"
#include "qeuclid/generators.hpp"
#include "support.hpp"

using namespace qe;
using namespace qe::test;

namespace {

GaussRat real(long num, long den = 1) { return GaussRat::ratio(num, den); }

long factorial(int k) {
    long r = 1;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}

// u_p written term by term from the sum over (n+, n3, n-; k, l): the coefficient
// (-lambda_+)^{k-l} q^{-2l + 2 n3 (k-l)} [k choose l]_{q^4} / (k! [[n+]]! [[n3]]! [[n-]]!)
// times (2m)^-k (i t)^k and the i from each of the n + 2k momentum factors.
PhaseSpacePoly series_plane_wave(int N, int K, const GaussRat& mass) {
    PhaseSpacePoly out(Factor{Sector::X, Convention::W}, Factor{Sector::P, Convention::W});
    const QRatio i_unit(GaussRat::i_unit());
    for (int a = 0; a <= N; ++a)
        for (int b = 0; a + b <= N; ++b)
            for (int c = 0; a + b + c <= N; ++c)
                for (int k = 0; k <= K; ++k)
                    for (int l = 0; l <= k; ++l) {
                        QRatio coeff(QScalar(-lambda_plus()).pow(static_cast<unsigned>(k - l)));
                        coeff = coeff.shifted(-2 * l + 2 * b * (k - l));
                        coeff *= QRatio(q_binomial(k, l, 4));
                        coeff *= QRatio::inverse_q_factorial(a, 4) * QRatio::inverse_q_factorial(b, 2) *
                                 QRatio::inverse_q_factorial(c, 4);
                        GaussRat scalar = real(1, factorial(k));
                        for (int j = 0; j < k; ++j) scalar *= (GaussRat(2) * mass).inverse();
                        coeff *= QRatio(scalar) * i_unit.pow(static_cast<unsigned>(a + b + c + 3 * k));
                        out.add_term({a, b, c, k}, {c + k - l, b + 2 * l, a + k - l, 0}, coeff);
                    }
    return out;
}

PhaseSpacePoly slice_time(const PhaseSpacePoly& f, int k) {
    return f.filtered([k](const Exp4& a, const Exp4&) { return a[3] == k; });
}

}  // namespace

TEST_CASE("closed form of the p^2 power coefficients") {
    CHECK(cq_coefficient(0, 0) == QScalar(1));
    CHECK(cq_coefficient(1, 0) == -lambda_plus());
    CHECK(cq_coefficient(1, 1) == q(-2));
    CHECK_THROWS(cq_coefficient(1, 2));
    for (int k = 1; k <= 12; ++k)
        for (int l = 0; l <= k; ++l) {
            QScalar rhs;
            if (l <= k - 1) rhs += -lambda_plus() * q(4 * l) * cq_coefficient(k - 1, l);
            if (l >= 1) rhs += q(-2) * cq_coefficient(k - 1, l - 1);
            CHECK(cq_coefficient(k, l) == rhs);
        }
}

TEST_CASE("powers of p^2") {
    const CoordPoly p2 = p(kPMinus) * p(kPPlus) * QRatio(-lambda_plus()) + p(kP3) * p(kP3) * rq(-2);
    CHECK(psq_power(0) == one(Sector::P));
    CHECK(psq_power(1) == p2);
    CoordPoly power = one(Sector::P);
    for (int k = 1; k <= 4; ++k) {
        power = star_product(power, p2);
        CHECK(psq_power(k) == power);
    }
    CHECK(psq_power(2, Convention::Wt) == star_power(momentum_square(Convention::Wt), 2));
}

TEST_CASE("reordering rule for p^2 powers") {
    for (int k = 0; k <= 3; ++k)
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 2; ++c) {
                    const CoordPoly m = CoordPoly::monomial(Sector::P, Convention::W, {a, b, c, 0});
                    CHECK(reordered_psq_product(k, a, b, c) == star_product(psq_power(k), m));
                }
}

TEST_CASE("time phase factors") {
    const GaussRat mass = real(3, 2);
    CHECK(phase_factor(PhaseSign::Plus, 0, mass) == PhaseSpacePoly::tensor(one(), one(Sector::P)));
    const QRatio coeff(GaussRat::i_unit() * (GaussRat(2) * mass).inverse());
    const PhaseSpacePoly expected =
        PhaseSpacePoly::tensor(one(), one(Sector::P)) + PhaseSpacePoly::tensor(x(kT), psq_power(1)) * coeff;
    CHECK(phase_factor(PhaseSign::Plus, 1, mass) == expected);
    const int K = 4;
    const GaussRat t = real(2, 5);
    const CoordPoly product = star_product(phase_factor_at(PhaseSign::Plus, K, mass, t),
                                           phase_factor_at(PhaseSign::Minus, K, mass, t));
    CHECK(product.truncated(2 * K) == one(Sector::P));
}

TEST_CASE("plane waves") {
    const GaussRat mass = real(1);
    for (int N = 0; N <= 3; ++N)
        for (int K = 0; K <= 3; ++K) {
            const PlaneWave w = build_plane_wave(WaveFamily::Lower, N, K, mass);
            CHECK(w.body == series_plane_wave(N, K, mass));
            CHECK(closed_form_plane_wave(N, K, mass) == w.body);
        }
    const PlaneWave w = build_plane_wave(WaveFamily::Lower, 3, 2, mass);
    const PhaseSpacePoly static_part = slice_time(w.body, 0);
    CHECK(static_part == build_exponential(ExpVariant::XP, 3).body);
    CHECK(conjugate(w.body) == build_plane_wave(WaveFamily::Upper, 3, 2, mass).body);
}

TEST_CASE("plane waves solve the free equations below the shell") {
    const GaussRat mass = real(5, 3);
    for (WaveFamily fam : kAllFamilies) {
        const PlaneWave w = build_plane_wave(fam, 2, 1, mass);
        CHECK(vanishes_below_shell(w, schrodinger_residual(w)));
        CHECK(vanishes_below_shell(w, energy_residual(w)));
        for (Index a : kSpatialIndices) CHECK(vanishes_below_shell(w, momentum_residual(w, a)));
    }
}

TEST_CASE("the Hamiltonian commutes with the momentum actions") {
    const Hamiltonian h(real(2));
    Rng rng(11);
    for (int i = 0; i < 10; ++i) {
        const CoordPoly f = random_poly(rng, Sector::X, Convention::W, 4, 4, 1);
        for (Index a : kSpatialIndices) {
            const DerivativeLabel d = d_left(a, true);
            CHECK(h.apply(apply_derivative(d, f), ActionSide::Left) ==
                  apply_derivative(d, h.apply(f, ActionSide::Left)));
        }
    }
}

TEST_CASE("momentum-space propagators") {
    const GaussRat mass = real(1);
    const MomentumPropagator k0 = propagator_momentum(PropagatorFamily::KR, Branch::Retarded, 0, mass);
    REQUIRE(k0.series.size() == 1);
    CHECK(k0.series.at(-1) == one(Sector::P) * QRatio(GaussRat::i_unit()));
    const MomentumPropagator adv = propagator_momentum(PropagatorFamily::KR, Branch::Advanced, 0, mass);
    CHECK(adv.series.at(-1) == one(Sector::P) * QRatio(-GaussRat::i_unit()));
    for (int K = 0; K <= 6; ++K) {
        const MomentumPropagator r = propagator_momentum(PropagatorFamily::KR, Branch::Retarded, K, mass);
        const MomentumPropagator l = propagator_momentum(PropagatorFamily::KL, Branch::Retarded, K, mass);
        CHECK(propagator_identity_holds(r));
        CHECK(propagator_identity_holds(l));
        for (int k = 0; k <= K; ++k) {
            const QScalar sign = k % 2 == 0 ? QScalar(1) : QScalar(-1);
            CHECK(l.scalars[static_cast<size_t>(k)] == r.scalars[static_cast<size_t>(k)] * sign);
        }
    }
}

TEST_CASE("wave packets") {
    const QLattice lat{1.5, -14, 14};
    const WavePacket wp = WavePacket::gaussian(lat, 1.0, {0.2, 0.5, -0.3}, 0.6, {0.0, 0.0, 0.0}, 6).normalized();
    CHECK(norm_check(wp) <= 1e-10);
    const WavePacket later = wp.at_time(1.0);
    CHECK(norm_check(later) <= 1e-10);
    for (Index a : kSpatialIndices) {
        CHECK(std::abs(expectation_momentum(wp, a) - expectation_momentum(later, a)) <= 1e-10);
        CHECK(std::abs(std::conj(expectation_momentum(later, a, true)) - expectation_momentum(later, a, false)) <= 1e-10);
        CHECK(std::abs(std::conj(expectation_position(later, a, true)) - expectation_position(later, a, false)) <= 1e-10);
    }
    WavePacket zero = wp;
    zero.c_lower *= 0.0;
    zero.c_star_lower *= 0.0;
    CHECK(norm_check(zero) == doctest::Approx(1.0));
    CHECK_THROWS(zero.normalized());
}

TEST_CASE("Heine comparison rows") {
    const auto rows = heine_diagnostic(3, real(1, 3), 1.1);
    REQUIRE(rows.size() == 4);
    for (const HeineRow& row : rows) {
        CHECK(row.double_sum_is_star_power);
        CHECK(std::isfinite(row.relative_gap));
    }
    CHECK(rows[0].product_defect.is_zero());
    CHECK(!rows[2].product_defect.is_zero());
}
