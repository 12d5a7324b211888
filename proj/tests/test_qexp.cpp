#include "doctest.h"
#include "qeuclid/generators.hpp"
#include "qeuclid/ncalgebra.hpp"
#include "support.hpp"

using namespace qe;
using namespace qe::test;

namespace {

// exp(x | i p) from its triple sum, truncated at position degree n.
PhaseSpacePoly series_exponential(int n) {
    PhaseSpacePoly out(Factor{Sector::X, Convention::W}, Factor{Sector::P, Convention::W});
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            for (int c = 0; a + b + c <= n; ++c) {
                QRatio coeff = QRatio(GaussRat::i_unit()).pow(static_cast<unsigned>(a + b + c));
                coeff *= QRatio::inverse_q_factorial(a, 4) * QRatio::inverse_q_factorial(b, 2) *
                         QRatio::inverse_q_factorial(c, 4);
                out.add_term({a, b, c, 0}, {c, b, a, 0}, coeff);
            }
    return out;
}

std::map<PhaseSpacePoly::Key, QRatio> coefficients(const PhaseSpacePoly& f) {
    return {f.terms().begin(), f.terms().end()};
}

int momentum_degree(const Exp4& e) { return e[0] + e[1] + e[2]; }

}  // namespace

TEST_CASE("truncated exponentials of low order") {
    const QExponential e0 = build_exponential(ExpVariant::XP, 0);
    CHECK(e0.body == PhaseSpacePoly::tensor(one(), one(Sector::P)));
    const QExponential e1 = build_exponential(ExpVariant::XP, 1);
    PhaseSpacePoly expected = PhaseSpacePoly::tensor(one(), one(Sector::P));
    expected += PhaseSpacePoly::tensor(x(kXPlus), p(kPPlus)) * ri();
    expected += PhaseSpacePoly::tensor(x(kX3), p(kP3)) * ri();
    expected += PhaseSpacePoly::tensor(x(kXMinus), p(kPMinus)) * ri();
    CHECK(e1.body == expected);
    const QExponential e2 = build_exponential(ExpVariant::XP, 2);
    CHECK(e2.body.coeff({2, 0, 0, 0}, {0, 0, 2, 0}) == -QRatio::inverse_q_number(2, 4));
}

TEST_CASE("the plain exponential matches its triple-sum series") {
    for (int n = 0; n <= 5; ++n) CHECK(build_exponential(ExpVariant::XP, n).body == series_exponential(n));
}

TEST_CASE("bar and star variants") {
    const int n = 4;
    const auto plain = coefficients(build_exponential(ExpVariant::XP, n).body);
    const auto bar = coefficients(build_exponential(ExpVariant::XPBar, n).body);
    REQUIRE(plain.size() == bar.size());
    for (const auto& [key, c] : plain) CHECK(bar.at(key) == c.substitute_inverse());

    const auto pxbar = coefficients(build_exponential(ExpVariant::PXBar, n).body);
    const auto starpx = coefficients(build_exponential(ExpVariant::StarPX, n).body);
    REQUIRE(pxbar.size() == starpx.size());
    for (const auto& [key, c] : pxbar) CHECK(starpx.at(key) == c.shifted(6 * momentum_degree(key.second)));
}

TEST_CASE("eigen equations hold below the truncation shell") {
    for (ExpVariant v : kAllVariants) {
        const QExponential e = build_exponential(v, 4);
        for (Index a : kSpatialIndices) {
            const PhaseSpacePoly r = eigen_residual(e, a);
            CHECK(vanishes_below_shell(r, 4));
            CHECK(!r.is_zero());
        }
        CHECK(exponential_at_zero_position(e) == one(Sector::P, e.body.second().convention));
        CHECK(exponential_at_zero_momentum(e) == one(Sector::X, e.body.first().convention));
    }
    // At order zero only the shell term -p^A survives.
    const PhaseSpacePoly r = eigen_residual(build_exponential(ExpVariant::XP, 0), Index::Three);
    CHECK(r == PhaseSpacePoly::tensor(one(), -p(kP3)));
}

TEST_CASE("q-translations of coordinates") {
    const CoordPoly x3 = x(kX3, Convention::Wt);
    CHECK(q_translate(x3) == PhaseSpacePoly::tensor(x3, one(Sector::X, Convention::Wt)) +
                                 PhaseSpacePoly::tensor(one(Sector::X, Convention::Wt), x3));
    Rng rng(14);
    for (int i = 0; i < 20; ++i) {
        const CoordPoly f = random_poly(rng, Sector::X, Convention::Wt, 3, 3);
        const PhaseSpacePoly explicit_form = q_translate(f);
        CHECK(explicit_form == q_translate_by_exponential(f, Translation::Plus));
        CHECK(set_second_zero(explicit_form) == f);
        CHECK(set_first_zero(explicit_form) == f);
        const CoordPoly g = random_poly(rng, Sector::X, Convention::W, 3, 3);
        const PhaseSpacePoly barred = q_translate(g, Translation::PlusBar);
        CHECK(set_second_zero(barred) == g);
        CHECK(set_first_zero(barred) == g);
    }
}

TEST_CASE("antipode and counit") {
    CHECK(q_invert(one(Sector::X, Convention::Wt), Translation::Plus) == one(Sector::X, Convention::Wt));
    Rng rng(15);
    for (int i = 0; i < 20; ++i) {
        const Translation t = rng.coin() ? Translation::Plus : Translation::PlusBar;
        const Convention c = t == Translation::Plus ? Convention::Wt : Convention::W;
        const CoordPoly f = random_poly(rng, Sector::X, c, 3, 3);
        const PhaseSpacePoly delta = q_translate(f, t);
        CHECK(antipode_left(delta, t) == counit(f));
        CHECK(antipode_right(delta, t) == counit(f));
    }
}

TEST_CASE("U operators change the ordering convention") {
    Rng rng(16);
    for (int i = 0; i < 20; ++i) {
        const CoordPoly f = random_poly(rng, Sector::X, Convention::Wt, 3, 3);
        CHECK(u_inverse_operator(f) == convert_convention(f, Convention::W));
        CHECK(u_operator(u_inverse_operator(f)) == f);
    }
}

TEST_CASE("addition theorem and inverse exponential") {
    CHECK(addition_lhs(3) == addition_rhs(3));
    const PhaseSpacePoly product = inverse_exponential_product(3).truncated_first(3);
    CHECK(product == PhaseSpacePoly::tensor(one(), one(Sector::P)));
}
