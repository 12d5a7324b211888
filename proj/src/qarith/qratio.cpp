#include "qeuclid/qratio.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qe {

const QScalar& cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
    static std::map<int, QScalar> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e, computed bottom-up so the
    // recursion never re-enters the lock.
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0 || cache.count(e)) continue;
        QScalar p = QScalar::q_pow(e) - QScalar(1);
        for (int f = 1; f < e; ++f) {
            if (e % f != 0) continue;
            QScalar quot;
            if (!laurent_divide(p, cache.at(f), quot)) throw std::logic_error("cyclotomic construction failed");
            p = quot;
        }
        cache.emplace(e, p);
    }
    return cache.at(d);
}

QRatio::QRatio(QScalar num, DenMap den) : num_(std::move(num)), den_(std::move(den)) {
    for (auto it = den_.begin(); it != den_.end();) {
        if (it->first < 2) throw std::invalid_argument("QRatio denominators must be Phi_d with d >= 2");
        if (it->second <= 0) it = den_.erase(it);
        else ++it;
    }
    reduce();
}

QRatio QRatio::inverse_q_number(int n, int base_exponent) {
    if (n < 1) throw std::domain_error("inverse_q_number: [[n]] with n < 1 is not invertible");
    if (base_exponent == 0) return QRatio(GaussRat::ratio(1, n));
    const int b = base_exponent < 0 ? -base_exponent : base_exponent;
    DenMap den;
    for (int d = 2; d <= b * n; ++d)
        if ((b * n) % d == 0 && b % d != 0) den[d] += 1;
    QScalar num = QScalar::q_pow(base_exponent < 0 ? b * (n - 1) : 0);
    QRatio r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

QRatio QRatio::inverse_q_factorial(int n, int base_exponent) {
    if (n < 0) throw std::invalid_argument("inverse_q_factorial: negative argument");
    QRatio r(1);
    for (int k = 2; k <= n; ++k) r *= inverse_q_number(k, base_exponent);
    return r;
}

QScalar QRatio::denominator_poly() const {
    QScalar p(1);
    for (const auto& [d, m] : den_) p *= cyclotomic(d).pow(static_cast<unsigned>(m));
    return p;
}

void QRatio::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        QScalar quot;
        while (it->second > 0 && laurent_divide(num_, cyclotomic(it->first), quot)) {
            num_ = std::move(quot);
            --it->second;
        }
        if (it->second == 0) it = den_.erase(it);
        else ++it;
    }
}

QRatio& QRatio::operator+=(const QRatio& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    QScalar lhs = num_;
    QScalar rhs = o.num_;
    DenMap merged = den_;
    for (const auto& [d, m] : o.den_) {
        int& slot = merged[d];
        if (m > slot) slot = m;
    }
    for (const auto& [d, m] : merged) {
        auto a = den_.find(d);
        int ma = a == den_.end() ? 0 : a->second;
        if (m > ma) lhs *= cyclotomic(d).pow(static_cast<unsigned>(m - ma));
        auto b = o.den_.find(d);
        int mb = b == o.den_.end() ? 0 : b->second;
        if (m > mb) rhs *= cyclotomic(d).pow(static_cast<unsigned>(m - mb));
    }
    num_ = lhs + rhs;
    den_ = std::move(merged);
    reduce();
    return *this;
}

QRatio& QRatio::operator-=(const QRatio& o) { return *this += -o; }

QRatio& QRatio::operator*=(const QRatio& o) {
    if (num_.is_zero()) return *this;
    if (o.num_.is_zero()) return *this = QRatio();
    num_ *= o.num_;
    if (o.den_.empty()) {
        // Numerator-only factors can cancel existing denominators.
        if (!den_.empty()) reduce();
        return *this;
    }
    for (const auto& [d, m] : o.den_) den_[d] += m;
    reduce();
    return *this;
}

QRatio QRatio::substitute_inverse() const {
    // Phi_d(1/q) = q^{-deg Phi_d} Phi_d(q) for d >= 2.
    int shift = 0;
    for (const auto& [d, m] : den_) shift += m * cyclotomic(d).max_exponent();
    QRatio r;
    r.num_ = num_.substitute_inverse().shifted(shift);
    r.den_ = den_;
    return r;
}

QRatio QRatio::pow(unsigned n) const {
    QRatio r(1);
    for (unsigned k = 0; k < n; ++k) r *= *this;
    return r;
}

std::complex<double> QRatio::eval(std::complex<double> q0) const {
    std::complex<double> v = num_.eval(q0);
    for (const auto& [d, m] : den_) {
        std::complex<double> phi = cyclotomic(d).eval(q0);
        for (int k = 0; k < m; ++k) v /= phi;
    }
    return v;
}

std::string QRatio::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(";
    bool first = true;
    for (const auto& [d, m] : den_) {
        if (!first) os << "*";
        first = false;
        os << "Phi" << d;
        if (m > 1) os << "^" << m;
    }
    os << ")";
    return os.str();
}

}  // namespace qe
