#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace qe;
using qe::test::q;

namespace {

// [[a]]_{q^b} as the exact quotient (1 - q^{ab}) / (1 - q^b).
QScalar quotient_q_number(int a, int b) {
    QScalar quotient;
    REQUIRE(laurent_divide(QScalar(1) - q(a * b), QScalar(1) - q(b), quotient));
    return quotient;
}

QScalar product_factorial(int n, int b) {
    QScalar r(1);
    for (int k = 1; k <= n; ++k) r *= quotient_q_number(k, b);
    return r;
}

}  // namespace

TEST_CASE("q-numbers of small arguments") {
    CHECK(q_number(0, 1).is_zero());
    CHECK(q_number(2, 1) == QScalar(1) + q());
    CHECK(q_number(3, 4) == QScalar(1) + q(4) + q(8));
    for (int a = 1; a <= 8; ++a)
        for (int b : {-4, -2, 1, 2, 4}) CHECK(q_number(a, b) == quotient_q_number(a, b));
}

TEST_CASE("q-factorials agree with products of quotients") {
    CHECK(q_factorial(0, 1) == QScalar(1));
    CHECK(q_factorial(2, 1) == QScalar(1) + q());
    const QScalar expected = (QScalar(1) + q()) * (QScalar(1) + q() + q(2));
    CHECK(q_factorial(3, 1) == expected);
    CHECK(expected == QScalar(1) + q() * QScalar(2) + q(2) * QScalar(2) + q(3) + QScalar(0));
    for (int n = 0; n <= 7; ++n) CHECK(q_factorial(n, 4) == product_factorial(n, 4));
}

TEST_CASE("q-binomials as factorial quotients") {
    for (int n = 0; n <= 5; ++n) CHECK(q_binomial(n, 0, 3) == QScalar(1));
    CHECK(q_binomial(2, 1, 1) == QScalar(1) + q());
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            QScalar quotient;
            REQUIRE(laurent_divide(product_factorial(n, 4), product_factorial(k, 4) * product_factorial(n - k, 4),
                                   quotient));
            CHECK(q_binomial(n, k, 4) == quotient);
        }
}

TEST_CASE("q-Pochhammer symbols") {
    const QScalar z = QScalar::monomial(0, GaussRat::ratio(2, 7)) + q(3);
    CHECK(q_pochhammer(z, 0) == QScalar(1));
    CHECK(q_pochhammer(z, 1) == QScalar(1) - z);
    CHECK(q_pochhammer(z, 2) == QScalar(1) - z - z * q() + z * z * q());
    QScalar direct(1);
    for (int k = 0; k < 4; ++k) direct *= QScalar(1) - z * q(4 * k);
    CHECK(q_pochhammer(z, 4, 4) == direct);
}

TEST_CASE("numeric evaluation of deformation constants") {
    CHECK(std::abs(eval_numeric(lambda(), 1.0)) == doctest::Approx(0.0));
    CHECK(eval_numeric(lambda_plus(), 2.0).real() == doctest::Approx(2.5));
    CHECK(eval_numeric(q_number(3, 1), 1.1).real() == doctest::Approx(3.31).epsilon(1e-14));
    CHECK(eval_numeric(kappa(), 1.5).real() == doctest::Approx(std::pow(1.5, 6)).epsilon(1e-14));
}

TEST_CASE("q-number additivity and the inverse substitution") {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int base : {1, 2, 4}) CHECK(q_number(a + b, base) == q_number(a, base) + q_number(b, base).shifted(base * a));
    const QScalar s = QScalar::monomial(-3, GaussRat(mpq_class(1, 2), mpq_class(-3))) + q(5) * QScalar(7);
    CHECK(s.substitute_inverse().substitute_inverse() == s);
    CHECK(s.substitute_inverse() != s);
}

TEST_CASE("Gaussian rationals") {
    const GaussRat a(mpq_class(3, 4), mpq_class(-2, 5));
    CHECK(a * a.inverse() == GaussRat(1));
    CHECK(rational_to_string(rational_from_string("6/4")) == "3/2");
    CHECK_THROWS(rational_from_string("1/0"));
    CHECK_THROWS(rational_from_string("abc"));
}

TEST_CASE("quotients by q-numbers") {
    for (int n = 1; n <= 8; ++n)
        for (int b : {1, 2, 4}) {
            const QRatio r = QRatio::inverse_q_number(n, b);
            CHECK(r * QRatio(q_number(n, b)) == QRatio(1));
            CHECK(std::abs(r.eval(1.3) - 1.0 / eval_numeric(q_number(n, b), 1.3)) < 1e-14);
            CHECK(std::abs(r.eval(1.0) - 1.0 / n) < 1e-15);
        }
    const QRatio f = QRatio::inverse_q_factorial(5, 4);
    CHECK(f * QRatio(q_factorial(5, 4)) == QRatio(1));
    CHECK(f.substitute_inverse() * QRatio(q_factorial(5, 4).substitute_inverse()) == QRatio(1));
}
