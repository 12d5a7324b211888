// QRatio: a Laurent polynomial divided by a product of cyclotomic polynomials.
//
// Inverse q-factorials appear in exponentials and translations. Every
// [[n]]_{q^b} with n >= 1 factors into cyclotomic polynomials Phi_d(q) with
// d >= 2 times a power of q, so quotients by such numbers stay inside the ring
// Laurent[q] localized at {Phi_d : d >= 2}. Phi_1 = q - 1 never occurs, which
// keeps evaluation at q = 1 well defined.
#pragma once

#include <complex>
#include <map>
#include <string>

#include "qeuclid/qscalar.hpp"

namespace qe {

// Phi_d(q) as a QScalar with integer coefficients (d >= 1).
const QScalar& cyclotomic(int d);

class QRatio {
public:
    using DenMap = std::map<int, int>;  // cyclotomic index d >= 2 -> multiplicity

    QRatio() = default;
    QRatio(long c) : num_(c) {}                         // NOLINT(google-explicit-constructor)
    QRatio(const GaussRat& c) : num_(c) {}              // NOLINT(google-explicit-constructor)
    QRatio(QScalar num) : num_(std::move(num)) {}       // NOLINT(google-explicit-constructor)
    QRatio(QScalar num, DenMap den);

    // 1/[[n]]_{q^b}, n >= 1.
    static QRatio inverse_q_number(int n, int base_exponent);
    // 1/[[n]]_{q^b}!.
    static QRatio inverse_q_factorial(int n, int base_exponent);

    const QScalar& numerator() const { return num_; }
    const DenMap& denominator() const { return den_; }
    QScalar denominator_poly() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.empty(); }

    QRatio operator-() const { return {-num_, den_}; }
    QRatio& operator+=(const QRatio& o);
    QRatio& operator-=(const QRatio& o);
    QRatio& operator*=(const QRatio& o);
    friend QRatio operator+(QRatio a, const QRatio& b) { return a += b; }
    friend QRatio operator-(QRatio a, const QRatio& b) { return a -= b; }
    friend QRatio operator*(QRatio a, const QRatio& b) { return a *= b; }
    friend bool operator==(const QRatio& a, const QRatio& b) { return (a - b).is_zero(); }
    friend bool operator!=(const QRatio& a, const QRatio& b) { return !(a == b); }

    QRatio shifted(int e) const { return {num_.shifted(e), den_}; }
    QRatio conj() const { return {num_.conj(), den_}; }
    QRatio substitute_inverse() const;
    QRatio pow(unsigned n) const;

    std::complex<double> eval(std::complex<double> q0) const;
    std::string to_string() const;

private:
    void reduce();

    QScalar num_;
    DenMap den_;
};

}  // namespace qe
