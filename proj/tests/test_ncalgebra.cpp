#include "doctest.h"
#include "qeuclid/generators.hpp"
#include "support.hpp"

using namespace qe;
using namespace qe::test;

namespace {

constexpr std::uint8_t Xp = 0, X3 = 1, Xm = 2, X0 = 3;

NCPoly w(const NCWord& word, const QRatio& c = QRatio(1)) { return NCPoly::word(Sector::X, word, c); }

}  // namespace

TEST_CASE("free products concatenate words") {
    CHECK(nc_multiply(w({Xp}), w({X3})) == w({Xp, X3}));
    const NCPoly f = w({Xm, X3}, rq(2)) + w({Xp});
    CHECK(nc_multiply(w({}), f) == f);
    CHECK(nc_multiply(w({Xm}) + w({X3}), w({Xp})) == w({Xm, Xp}) + w({X3, Xp}));
}

TEST_CASE("normal ordering in the W convention") {
    const QRatio lam(lambda());
    CHECK(normal_order(w({X3, Xp}), Convention::W) == w({Xp, X3}, rq(2)));
    CHECK(normal_order(w({Xm, X3}), Convention::W) == w({X3, Xm}, rq(2)));
    CHECK(normal_order(w({Xm, Xp}), Convention::W) == w({Xp, Xm}) + w({X3, X3}, lam));
    CHECK(normal_order(w({X0, Xm, Xp}), Convention::W) == w({Xp, Xm, X0}) + w({X3, X3, X0}, lam));
}

TEST_CASE("normal ordering in the W~ convention") {
    // The reversed order reads the same relations in the other direction.
    const QRatio lam(lambda());
    CHECK(normal_order(w({Xp, X3}), Convention::Wt) == w({X3, Xp}, rq(-2)));
    CHECK(normal_order(w({Xp, Xm}), Convention::Wt) == w({Xm, Xp}) + w({X3, X3}, -lam));
    CHECK(normal_order(w({Xp, X0}), Convention::Wt) == w({X0, Xp}));
}

TEST_CASE("the rewrite strategy does not change the normal form") {
    Rng rng(17);
    for (int i = 0; i < 40; ++i) {
        const NCPoly f = random_ncpoly(rng, Sector::X, 5, 3, true);
        for (Convention c : {Convention::W, Convention::Wt}) {
            const NCPoly left = normal_order(f, c, RewriteStrategy::Leftmost);
            const NCPoly right = normal_order(f, c, RewriteStrategy::Rightmost);
            CHECK(left == right);
            for (const auto& [word, coeff] : left.terms()) CHECK(is_normal_ordered(word, c));
        }
    }
}

TEST_CASE("weyl map on monomials") {
    const CoordPoly f = CoordPoly::monomial(Sector::X, Convention::W, {2, 1, 0, 1});
    CHECK(weyl_map(f) == w({Xp, Xp, X3, X0}));
    const CoordPoly g = CoordPoly::monomial(Sector::X, Convention::Wt, {1, 0, 1, 1});
    CHECK(weyl_map(g) == w({X0, Xm, Xp}));
    CHECK_THROWS_AS(weyl_unmap(w({X3, Xp}), Convention::W), std::invalid_argument);
}

TEST_CASE("weyl round trip on random polynomials") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const Convention c = rng.coin() ? Convention::W : Convention::Wt;
        const CoordPoly f = random_poly(rng, rng.coin() ? Sector::X : Sector::P, c, 5, 4, 1);
        CHECK(weyl_unmap(weyl_map(f), c) == f);
    }
}

TEST_CASE("changing the ordering convention is invertible") {
    Rng rng(9);
    for (int i = 0; i < 40; ++i) {
        const CoordPoly f = random_poly(rng, Sector::X, Convention::W, 4, 3, 1);
        const CoordPoly g = convert_convention(f, Convention::Wt);
        CHECK(g.convention() == Convention::Wt);
        CHECK(convert_convention(g, Convention::W) == f);
        CHECK(normal_order(weyl_map(g), Convention::W) == weyl_map(f));
    }
}

TEST_CASE("momentum words order p- before p3 before p+") {
    const NCPoly f = NCPoly::word(Sector::P, {2, 0});
    const NCPoly expected = NCPoly::word(Sector::P, {0, 2}) + NCPoly::word(Sector::P, {1, 1}, QRatio(lambda()));
    CHECK(normal_order(f, Convention::W) == expected);
}
