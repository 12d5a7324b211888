#include "doctest.h"
#include "qeuclid/generators.hpp"
#include "qeuclid/ncalgebra.hpp"
#include "support.hpp"

using namespace qe;
using namespace qe::test;

TEST_CASE("position relations") {
    const QRatio lam(lambda());
    CHECK(star_product(x(kX3), x(kXPlus)) == x(kXPlus) * x(kX3) * rq(2));
    CHECK(star_product(x(kXMinus), x(kX3)) == x(kX3) * x(kXMinus) * rq(2));
    CHECK(star_product(x(kXMinus), x(kXPlus)) == x(kXPlus) * x(kXMinus) + x(kX3) * x(kX3) * lam);
    CHECK(star_product(x(kXPlus), x(kXMinus)) == x(kXPlus) * x(kXMinus));
    const CoordPoly f = x(kXMinus) * rq(3) + x(kX3) * x(kT);
    CHECK(star_product(f, one()) == f);
    CHECK(star_product(one(), f) == f);
}

TEST_CASE("momentum relations") {
    const QRatio lam(lambda());
    CHECK(star_product(p(kPPlus), p(kPMinus)) == p(kPMinus) * p(kPPlus) + p(kP3) * p(kP3) * lam);
    CHECK(star_product(p(kP3), p(kPMinus)) == p(kPMinus) * p(kP3) * rq(2));
}

TEST_CASE("star product against the normal-ordering oracle") {
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        const Convention c = rng.coin() ? Convention::W : Convention::Wt;
        const Sector s = rng.coin() ? Sector::X : Sector::P;
        const CoordPoly f = random_poly(rng, s, c, 4, 3, s == Sector::X ? 1 : 0);
        const CoordPoly g = random_poly(rng, s, c, 4, 3, s == Sector::X ? 1 : 0);
        CHECK(star_product(f, g) == star_product_oracle(f, g));
        CHECK(star_product_oracle(f, g) == star_product_oracle(f, g, RewriteStrategy::Rightmost));
    }
}

TEST_CASE("associativity and the time coordinate") {
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        const Convention c = rng.coin() ? Convention::W : Convention::Wt;
        const CoordPoly f = random_poly(rng, Sector::X, c, 3, 3, 1);
        const CoordPoly g = random_poly(rng, Sector::X, c, 3, 3, 1);
        const CoordPoly h = random_poly(rng, Sector::X, c, 2, 3, 1);
        CHECK(star_product(star_product(f, g), h) == star_product(f, star_product(g, h)));
        CHECK(star_product(x(kT, c), f) == star_product(f, x(kT, c)));
    }
}

TEST_CASE("conjugation") {
    CHECK(conjugate(x(kXPlus)) == x(kXMinus) * QRatio(-q()));
    CHECK(conjugate(x(kXMinus)) == x(kXPlus) * QRatio(-q(-1)));
    CHECK(conjugate(x(kX3) * ri()) == x(kX3) * (-ri()));
    CHECK(conjugate(x(kT)) == x(kT));
    Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        const CoordPoly f = random_poly(rng, Sector::X, Convention::W, 3, 3, 1);
        const CoordPoly g = random_poly(rng, Sector::X, Convention::W, 3, 3, 1);
        CHECK(conjugate(conjugate(f)) == f);
        CHECK(conjugate(star_product(f, g)) == star_product(conjugate(g), conjugate(f)));
    }
}

TEST_CASE("index positions") {
    // x_+ = -q x^-, x_- = -q^-1 x^+, x_3 = x^3.
    CHECK(coordinate(Sector::X, Convention::W, Index::Plus, false) == x(kXMinus) * QRatio(-q()));
    CHECK(coordinate(Sector::X, Convention::W, Index::Minus, false) == x(kXPlus) * QRatio(-q(-1)));
    CHECK(coordinate(Sector::X, Convention::W, Index::Three, false) == x(kX3));
    CHECK(coordinate(Sector::X, Convention::W, Index::Zero, true) == x(kT));
    const CoordPoly e = one();
    const IndexedTriple lowered = lower_index({e, CoordPoly(Sector::X, Convention::W), CoordPoly(Sector::X, Convention::W)});
    // v^+ = 1 lowers to v_- = g_{-+} = -q^-1; the partner entry g_{+-} = -q is the one in x_+ above.
    CHECK(lowered[2] == e * QRatio(-q(-1)));
    CHECK(lowered[0].is_zero());
    CHECK(raise_index(lowered)[0] == e);
}

TEST_CASE("square of the momentum") {
    // p^A p_A with p^+ = -q p_-, p^3 = p_3, p^- = -q^-1 p_+.
    const CoordPoly contraction = star_product(p(kPMinus) * QRatio(-q()), p(kPPlus)) + star_product(p(kP3), p(kP3)) +
                                  star_product(p(kPPlus) * QRatio(-q(-1)), p(kPMinus));
    const CoordPoly expected = p(kPMinus) * p(kPPlus) * QRatio(-lambda_plus()) + p(kP3) * p(kP3) * rq(-2);
    CHECK(contraction == expected);
    CHECK(momentum_square(Convention::W) == expected);
    CHECK(momentum_square(Convention::Wt) == convert_convention(expected, Convention::Wt));
    // p^2 is central.
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        const CoordPoly f = random_poly(rng, Sector::P, Convention::W, 3, 3);
        CHECK(star_product(expected, f) == star_product(f, expected));
    }
}

TEST_CASE("the bar substitution") {
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        const CoordPoly f = random_poly(rng, Sector::X, Convention::W, 3, 3, 1);
        const CoordPoly g = random_poly(rng, Sector::X, Convention::W, 3, 3, 1);
        CHECK(substitute_bar(substitute_bar(f)) == f);
        CHECK(substitute_bar(star_product(f, g)) == star_product(substitute_bar(f), substitute_bar(g)));
    }
}
