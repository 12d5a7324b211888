#include "qeuclid/qscalar.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace qe {

GaussRat GaussRat::ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class r(num, den);
    r.canonicalize();
    return {r, mpq_class(0)};
}

GaussRat GaussRat::inverse() const {
    mpq_class n = re * re + im * im;
    if (sgn(n) == 0) throw std::domain_error("inverse of zero Gaussian rational");
    return {re / n, -im / n};
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
        re *= o.re;
        return *this;
    }
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string rational_to_string(const mpq_class& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

mpq_class rational_from_string(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

QScalar::QScalar(long c) {
    if (c != 0) terms_.emplace(0, GaussRat(c));
}

QScalar::QScalar(const GaussRat& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

QScalar QScalar::monomial(int exponent, const GaussRat& coeff) {
    QScalar s;
    if (!coeff.is_zero()) s.terms_.emplace(exponent, coeff);
    return s;
}

bool QScalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

GaussRat QScalar::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? GaussRat() : it->second;
}

int QScalar::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int QScalar::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void QScalar::add_term(int exponent, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QScalar QScalar::operator-() const {
    QScalar r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

QScalar& QScalar::operator*=(const QScalar& o) {
    *this = *this * o;
    return *this;
}

QScalar& QScalar::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

QScalar QScalar::pow(unsigned n) const {
    QScalar result(1);
    QScalar base = *this;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

QScalar QScalar::shifted(int e) const {
    if (e == 0) return *this;
    QScalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k + e, c);
    return r;
}

QScalar QScalar::substitute_inverse() const { return substitute_power(-1); }

QScalar QScalar::substitute_power(int k) const {
    if (k == 0) throw std::invalid_argument("substitution q -> q^0 is not invertible");
    QScalar r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
    return r;
}

QScalar QScalar::conj() const {
    QScalar r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.conj());
    return r;
}

std::complex<double> QScalar::eval(std::complex<double> q0) const {
    if (q0 == std::complex<double>(0.0, 0.0) && !terms_.empty() && terms_.begin()->first < 0)
        throw std::domain_error("evaluation of a Laurent polynomial at q = 0");
    std::complex<double> sum(0.0, 0.0);
    for (const auto& [e, c] : terms_) sum += c.to_complex() * std::pow(q0, e);
    return sum;
}

namespace {

std::string coeff_text(const GaussRat& c) {
    auto rat = [](const mpq_class& r) {
        if (r.get_den() == 1) return r.get_num().get_str();
        return r.get_num().get_str() + "/" + r.get_den().get_str();
    };
    if (sgn(c.im) == 0) return rat(c.re);
    if (sgn(c.re) == 0) return rat(c.im) + "i";
    return "(" + rat(c.re) + (sgn(c.im) > 0 ? "+" : "") + rat(c.im) + "i)";
}

}  // namespace

std::string QScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << coeff_text(c);
        if (e != 0) os << "*q^" << e;
    }
    return os.str();
}

QScalar lambda() { return QScalar::q_pow(1) - QScalar::q_pow(-1); }
QScalar lambda_plus() { return QScalar::q_pow(1) + QScalar::q_pow(-1); }
QScalar kappa() { return QScalar::q_pow(6); }

QScalar q_number(int a, int base_exponent) {
    if (a < 0) throw std::invalid_argument("q_number: negative argument");
    QScalar r;
    for (int j = 0; j < a; ++j) r.add_term(base_exponent * j, GaussRat(1));
    return r;
}

namespace {

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

QScalar q_factorial(int n, int base_exponent) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    static std::map<std::pair<int, int>, QScalar> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find({n, base_exponent});
        if (it != cache.end()) return it->second;
    }
    QScalar r(1);
    for (int k = 1; k <= n; ++k) r *= q_number(k, base_exponent);
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache.emplace(std::make_pair(n, base_exponent), r);
    return r;
}

QScalar q_falling(int n, int k, int base_exponent) {
    if (k < 0 || n < 0) throw std::invalid_argument("q_falling: negative argument");
    if (k > n) return QScalar();
    static std::map<std::tuple<int, int, int>, QScalar> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find({n, k, base_exponent});
        if (it != cache.end()) return it->second;
    }
    QScalar r(1);
    for (int j = 0; j < k; ++j) r *= q_number(n - j, base_exponent);
    std::lock_guard<std::mutex> lock(cache_mutex());
    cache.emplace(std::make_tuple(n, k, base_exponent), r);
    return r;
}

bool laurent_divide(const QScalar& a, const QScalar& b, QScalar& quotient) {
    if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    quotient = QScalar();
    if (a.is_zero()) return true;
    // Work with ordinary polynomials: a = q^amin A(q), b = q^bmin B(q).
    const int amin = a.min_exponent();
    const int bmin = b.min_exponent();
    const int bdeg = b.max_exponent() - bmin;
    std::vector<GaussRat> rem(static_cast<size_t>(a.max_exponent() - amin + 1));
    for (const auto& [e, c] : a.terms()) rem[static_cast<size_t>(e - amin)] = c;
    std::vector<GaussRat> div(static_cast<size_t>(bdeg + 1));
    for (const auto& [e, c] : b.terms()) div[static_cast<size_t>(e - bmin)] = c;
    const GaussRat lead_inv = div.back().inverse();
    const bool monic = div.back() == GaussRat(1);
    for (int top = static_cast<int>(rem.size()) - 1; top >= bdeg; --top) {
        GaussRat c = rem[static_cast<size_t>(top)];
        if (c.is_zero()) continue;
        if (!monic) c *= lead_inv;
        const int shift = top - bdeg;
        quotient.add_term(shift + amin - bmin, c);
        for (int j = 0; j <= bdeg; ++j) {
            if (div[static_cast<size_t>(j)].is_zero()) continue;
            rem[static_cast<size_t>(shift + j)] -= c * div[static_cast<size_t>(j)];
        }
    }
    for (const auto& c : rem)
        if (!c.is_zero()) return false;
    return true;
}

QScalar q_binomial(int n, int k, int base_exponent) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("q_binomial: require 0 <= k <= n");
    QScalar num = q_factorial(n, base_exponent);
    QScalar den = q_factorial(n - k, base_exponent) * q_factorial(k, base_exponent);
    QScalar out;
    if (!laurent_divide(num, den, out))
        throw std::logic_error("q_binomial: factorial quotient is not a Laurent polynomial");
    return out;
}

QScalar q_pochhammer(const QScalar& z, int k, int base_exponent) {
    if (k < 0) throw std::invalid_argument("q_pochhammer: negative length");
    QScalar r(1);
    for (int j = 0; j < k; ++j) r *= QScalar(1) - z.shifted(base_exponent * j);
    return r;
}

std::complex<double> eval_numeric(const QScalar& s, std::complex<double> q0) {
    if (q0 == std::complex<double>(0.0, 0.0)) throw std::domain_error("eval_numeric: q0 must be nonzero");
    return s.eval(q0);
}

}  // namespace qe
