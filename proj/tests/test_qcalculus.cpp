#include <cmath>

#include "doctest.h"
#include "qeuclid/generators.hpp"
#include "qeuclid/lattice.hpp"
#include "qeuclid/ncalgebra.hpp"
#include "support.hpp"

using namespace qe;
using namespace qe::test;

namespace {

constexpr double kQ0 = 1.3;

using Fn = std::function<cplx(double, double, double)>;

Fn values_of(const CoordPoly& f) {
    const NumPoly n = NumPoly::from(f, kQ0);
    return [n](double a, double b, double c) { return n.value_at(a, b, c); };
}

// Numeric Jackson quotient in one variable with scale factor s.
Fn jackson(const Fn& f, int var, double s) {
    return [f, var, s](double a, double b, double c) {
        double y[3] = {a, b, c};
        const double base = y[var];
        const cplx before = f(y[0], y[1], y[2]);
        y[var] = s * base;
        return (f(y[0], y[1], y[2]) - before) / ((s - 1.0) * base);
    };
}

Fn dilate(const Fn& f, int var, double s) {
    return [f, var, s](double a, double b, double c) {
        double y[3] = {a, b, c};
        y[var] *= s;
        return f(y[0], y[1], y[2]);
    };
}

// Operator representations of the left partial derivatives on W-ordered input.
Fn partial_plus(const Fn& f) { return jackson(f, kXPlus, std::pow(kQ0, 4)); }
Fn partial_three(const Fn& f) { return jackson(dilate(f, kXPlus, kQ0 * kQ0), kX3, kQ0 * kQ0); }
Fn partial_minus(const Fn& f) {
    const double lam = kQ0 - 1.0 / kQ0;
    const Fn first = jackson(dilate(f, kX3, kQ0 * kQ0), kXMinus, std::pow(kQ0, 4));
    const Fn second = jackson(jackson(f, kX3, kQ0 * kQ0), kX3, kQ0 * kQ0);
    return [=](double a, double b, double c) { return first(a, b, c) + lam * a * second(a, b, c); };
}

}  // namespace

TEST_CASE("Jackson derivatives of monomials") {
    const CoordPoly xp = x(kXPlus);
    CHECK(jackson_derivative(xp, kXPlus, 4) == one());
    CHECK(jackson_derivative(xp * xp, kXPlus, 4) == xp * QRatio(QScalar(1) + q(4)));
    CHECK(jackson_derivative(xp, kX3, 2).is_zero());
}

TEST_CASE("left partial derivatives on sample inputs") {
    CHECK(apply_derivative(d_left(Index::Minus), x(kX3) * x(kX3)) == x(kXPlus) * QRatio(lambda() * (QScalar(1) + q(2))));
    CHECK(apply_derivative(d_left(Index::Zero), x(kT) * x(kT)) == x(kT) * QRatio(2));
    CHECK(apply_derivative(dhat_leftbar(Index::Minus), x(kXMinus, Convention::Wt)) == one(Sector::X, Convention::Wt));
    for (Index a : kSpatialIndices)
        for (Index b : kSpatialIndices) {
            const int var = natural_variable(Sector::X, b);
            const CoordPoly expected = a == b ? one() : CoordPoly(Sector::X, Convention::W);
            CHECK(apply_derivative(d_left(a), x(var)) == expected);
        }
}

TEST_CASE("left partial derivatives match their difference-operator form") {
    Rng rng(12);
    const double points[3][3] = {{0.7, -1.1, 0.4}, {1.3, 0.5, -0.9}, {-0.6, 0.8, 1.7}};
    for (int i = 0; i < 20; ++i) {
        const CoordPoly f = random_poly(rng, Sector::X, Convention::W, 4, 4);
        const Fn fn = values_of(f);
        const Fn expected[3] = {partial_plus(fn), partial_three(fn), partial_minus(fn)};
        for (int k = 0; k < 3; ++k) {
            const Fn actual = values_of(apply_derivative(d_left(kSpatialIndices[k]), f));
            for (const auto& y : points) {
                const cplx e = expected[k](y[0], y[1], y[2]);
                CHECK(std::abs(actual(y[0], y[1], y[2]) - e) <= 1e-9 * (1.0 + std::abs(e)));
            }
        }
    }
}

TEST_CASE("hat derivatives are the mirrored plain derivatives") {
    auto mirror = [](Index a) { return a == Index::Plus ? Index::Minus : a == Index::Minus ? Index::Plus : a; };
    Rng rng(2);
    for (int i = 0; i < 20; ++i) {
        const CoordPoly f = random_poly(rng, Sector::X, Convention::W, 4, 3, 1);
        for (Index a : {Index::Plus, Index::Three, Index::Minus, Index::Zero})
            for (bool up : {false, true})
                CHECK(apply_derivative(dhat_leftbar(mirror(a), up), substitute_bar(f)) ==
                      substitute_bar(apply_derivative(d_left(a, up), f)));
    }
}

TEST_CASE("partial derivatives commute up to the momentum relations") {
    // d_- d_+ - d_+ d_- = lambda d_3 d_3 mirrors p_+ p_- relation on the left action.
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
        const CoordPoly f = random_poly(rng, Sector::X, Convention::W, 4, 4);
        auto d = [](Index a, const CoordPoly& g) { return apply_derivative(d_left(a), g); };
        const CoordPoly lhs = d(Index::Plus, d(Index::Minus, f)) - d(Index::Minus, d(Index::Plus, f));
        CHECK(lhs == d(Index::Three, d(Index::Three, f)) * QRatio(lambda()));
    }
}

TEST_CASE("inverse partial derivatives") {
    CHECK(inverse_partial(d_left(Index::Plus), one()) == x(kXPlus));
    CHECK(inverse_partial(d_left(Index::Plus), x(kXPlus)) == x(kXPlus) * x(kXPlus) * QRatio::inverse_q_number(2, 4));
    Rng rng(6);
    for (int i = 0; i < 50; ++i) {
        const CoordPoly f = random_poly(rng, Sector::X, Convention::W, 3, 3, 1);
        const DerivativeLabel l = d_left(Index::Minus);
        CHECK(apply_derivative(l, inverse_partial(l, f)) == f);
    }
    CHECK_THROWS(inverse_partial(d_rightbar(Index::Plus), one()));
}

TEST_CASE("lattice derivatives agree with polynomial derivatives") {
    const QLattice lat{kQ0, -6, 6};
    Rng rng(10);
    const CoordPoly f = random_poly(rng, Sector::X, Convention::W, 3, 4);
    const LatticeFn g = LatticeFn::from_poly(lat, NumPoly::from(f, kQ0));
    for (Index a : kSpatialIndices)
        for (bool up : {false, true}) {
            const LatticeFn exact = LatticeFn::from_poly(lat, NumPoly::from(apply_derivative(d_left(a, up), f), kQ0));
            const LatticeFn sampled = apply_derivative(d_left(a, up), g);
            double worst = 0.0;
            // Interior points only: dilations read past the edge of the grid.
            for (int i = 0; i < lat.per_axis(); ++i)
                for (int j = 0; j < lat.per_axis(); ++j)
                    for (int k = 0; k < lat.per_axis(); ++k) {
                        if (lat.exponent_of(i) > 0 || lat.exponent_of(j) > 0 || lat.exponent_of(k) > 0) continue;
                        worst = std::max(worst, std::abs(exact.at(i, j, k) - sampled.at(i, j, k)));
                    }
            CHECK(worst < 1e-9);
        }
}

TEST_CASE("Jackson integrals") {
    const QLattice lat{1.5, -14, 14};
    const LatticeFn zero(lat, Sector::X, Convention::W);
    CHECK(std::abs(integral_all_space(zero).value) == 0.0);
    // Integrands vanish near the origin and far out, like the compactly supported samples.
    auto supported = [](double a, double b, double c) {
        const double lo = std::pow(1.5, -6), hi = std::pow(1.5, 6);
        for (double y : {a, b, c})
            if (std::abs(y) < lo || std::abs(y) > hi) return false;
        return true;
    };
    const LatticeFn odd = LatticeFn::sample(lat, Sector::X, Convention::W, [&](double a, double b, double c) {
        return supported(a, b, c) ? cplx(b * std::exp(-(a * a + b * b + c * c)), 0.0) : cplx(0.0);
    });
    CHECK(std::abs(integral_all_space(odd).value) <= 1e-12);
    const LatticeFn bump = LatticeFn::sample(lat, Sector::X, Convention::W, [&](double a, double b, double c) {
        return supported(a, b, c) ? cplx(1.0, 0.3 * a) * std::exp(-(a * a + b * b + c * c)) : cplx(0.0);
    });
    for (Index a : kSpatialIndices)
        for (bool up : {false, true}) {
            const IntegralResult r = integral_all_space(apply_derivative(d_left(a, up), bump));
            CHECK(std::abs(r.value) <= 1e-10 * r.total_mass);
        }
    const LatticeFn wide = LatticeFn::sample(lat, Sector::X, Convention::W, [](double, double, double) { return cplx(1.0); });
    CHECK_THROWS_AS(integral_all_space(wide), std::domain_error);
}
