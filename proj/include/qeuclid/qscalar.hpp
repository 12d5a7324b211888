// Exact arithmetic in the deformation parameter q.
//
// GaussRat is a Gaussian rational a + b i with a, b in Q (GMP backed).
// QScalar is a Laurent polynomial in q whose coefficients are GaussRat.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace qe {

struct GaussRat {
    mpq_class re;
    mpq_class im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i_unit() { return {mpq_class(0), mpq_class(1)}; }
    static GaussRat ratio(long num, long den);

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussRat conj() const { return {re, -im}; }
    GaussRat inverse() const;
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

// Canonical text for a rational: "n/d" with d > 0 (d omitted never; "3/1" style
// keeps the JSON format uniform).
std::string rational_to_string(const mpq_class& r);
mpq_class rational_from_string(const std::string& s);

class QScalar {
public:
    using TermMap = std::map<int, GaussRat>;

    QScalar() = default;
    QScalar(long c);              // NOLINT(google-explicit-constructor)
    QScalar(const GaussRat& c);   // NOLINT(google-explicit-constructor)

    static QScalar monomial(int exponent, const GaussRat& coeff = GaussRat(1));
    static QScalar q_pow(int exponent) { return monomial(exponent); }
    static QScalar i_unit() { return QScalar(GaussRat::i_unit()); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat coeff(int exponent) const;
    int min_exponent() const;  // undefined for zero
    int max_exponent() const;

    // Adds c * q^e in place, keeping the sparse form canonical.
    void add_term(int exponent, const GaussRat& c);

    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    QScalar& operator*=(const QScalar& o);
    QScalar& operator*=(const GaussRat& c);
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend QScalar operator*(QScalar a, const GaussRat& c) { return a *= c; }
    friend bool operator==(const QScalar& a, const QScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    QScalar pow(unsigned n) const;
    // Multiplication by q^e.
    QScalar shifted(int e) const;
    // q -> q^-1.
    QScalar substitute_inverse() const;
    // q -> q^k for k != 0.
    QScalar substitute_power(int k) const;
    // Complex conjugation of coefficients; q is real.
    QScalar conj() const;

    std::complex<double> eval(std::complex<double> q0) const;

    // Human-readable form such as "(1/2)q^-1 + i q^2".
    std::string to_string() const;

private:
    TermMap terms_;
};

// Deformation constants.
QScalar lambda();       // q - q^-1
QScalar lambda_plus();  // q + q^-1
QScalar kappa();        // q^6

// [[a]]_{q^b} = 1 + q^b + ... + q^{b(a-1)}.
QScalar q_number(int a, int base_exponent);
QScalar q_factorial(int n, int base_exponent);
// Exact quotient of q-factorials; throws std::logic_error if the division
// leaves a remainder (which would indicate an internal inconsistency).
QScalar q_binomial(int n, int k, int base_exponent);
// (z; q^b)_k = (1 - z)(1 - z q^b)...(1 - z q^{b(k-1)}).
QScalar q_pochhammer(const QScalar& z, int k, int base_exponent = 1);
// [[n]]_{q^b} [[n-1]]_{q^b} ... [[n-k+1]]_{q^b}; zero when k > n.
QScalar q_falling(int n, int k, int base_exponent);

std::complex<double> eval_numeric(const QScalar& s, std::complex<double> q0);

// Exact division of Laurent polynomials. Returns false if b does not divide a.
bool laurent_divide(const QScalar& a, const QScalar& b, QScalar& quotient);

}  // namespace qe
