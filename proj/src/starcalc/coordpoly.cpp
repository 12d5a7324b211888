#include "qeuclid/coordpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qe {

std::string sector_name(Sector s) { return s == Sector::X ? "x" : "p"; }
std::string convention_name(Convention c) { return c == Convention::W ? "W" : "Wt"; }

Sector parse_sector(const std::string& s) {
    if (s == "x") return Sector::X;
    if (s == "p") return Sector::P;
    throw std::invalid_argument("unknown sector '" + s + "'");
}

Convention parse_convention(const std::string& s) {
    if (s == "W") return Convention::W;
    if (s == "Wt") return Convention::Wt;
    throw std::invalid_argument("unknown convention '" + s + "'");
}

SlotFrame slot_frame(Convention c) {
    if (c == Convention::W) return {{0, 1, 2}, +1};
    return {{2, 1, 0}, -1};
}

int spatial_degree(const Exp4& e) { return e[0] + e[1] + e[2]; }

CoordPoly CoordPoly::constant(Sector s, Convention c, const QRatio& v) {
    CoordPoly f(s, c);
    f.add_term({0, 0, 0, 0}, v);
    return f;
}

CoordPoly CoordPoly::monomial(Sector s, Convention c, const Exp4& e, const QRatio& v) {
    for (int k : e)
        if (k < 0) throw std::invalid_argument("negative exponent in monomial");
    CoordPoly f(s, c);
    f.add_term(e, v);
    return f;
}

CoordPoly CoordPoly::variable(Sector s, Convention c, int index) {
    if (index < 0 || index > 3) throw std::invalid_argument("variable index out of range");
    if (s == Sector::P && index == 3) throw std::invalid_argument("the momentum sector has no time variable");
    Exp4 e{0, 0, 0, 0};
    e[static_cast<size_t>(index)] = 1;
    return monomial(s, c, e);
}

QRatio CoordPoly::coeff(const Exp4& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QRatio() : it->second;
}

int CoordPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, spatial_degree(e));
    return d;
}

int CoordPoly::time_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[3]);
    return d;
}

void CoordPoly::add_term(const Exp4& e, const QRatio& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoordPoly CoordPoly::operator-() const {
    CoordPoly r(sector_, conv_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

namespace {
void check_same(const CoordPoly& a, const CoordPoly& b) {
    if (a.sector() != b.sector() || a.convention() != b.convention())
        throw std::invalid_argument("sector/convention mismatch: " + sector_name(a.sector()) + "/" +
                                    convention_name(a.convention()) + " vs " + sector_name(b.sector()) + "/" +
                                    convention_name(b.convention()));
}
}  // namespace

CoordPoly& CoordPoly::operator+=(const CoordPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        const auto terms = o.terms_;
        sector_ = o.sector_;
        conv_ = o.conv_;
        terms_ = terms;
        return *this;
    }
    check_same(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CoordPoly& CoordPoly::operator-=(const CoordPoly& o) { return *this += -o; }

CoordPoly& CoordPoly::operator*=(const QRatio& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
    return *this;
}

bool operator==(const CoordPoly& a, const CoordPoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.sector_ != b.sector_ || a.conv_ != b.conv_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
        if (ib->first != e || !(ib->second == c)) return false;
        ++ib;
    }
    return true;
}

CoordPoly CoordPoly::commutative_product(const CoordPoly& o) const {
    check_same(*this, o);
    CoordPoly r(sector_, conv_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return r;
}

CoordPoly CoordPoly::truncated(int max_spatial, int max_time) const {
    return filtered([&](const Exp4& e) { return spatial_degree(e) <= max_spatial && e[3] <= max_time; });
}

CoordPoly CoordPoly::filtered(const std::function<bool(const Exp4&)>& keep) const {
    CoordPoly r(sector_, conv_);
    for (const auto& [e, c] : terms_)
        if (keep(e)) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

CoordPoly CoordPoly::with_convention(Convention c) const {
    CoordPoly r = *this;
    r.conv_ = c;
    return r;
}

CoordPoly CoordPoly::map_coefficients(const std::function<QRatio(const QRatio&)>& f) const {
    CoordPoly r(sector_, conv_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
}

namespace {
const char* var_names(Sector s, int k) {
    static const char* xs[] = {"x+", "x3", "x-", "t"};
    static const char* ps[] = {"p-", "p3", "p+", "?"};
    return s == Sector::X ? xs[k] : ps[k];
}
}  // namespace

std::string CoordPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        for (int k = 0; k < 4; ++k) {
            if (e[static_cast<size_t>(k)] == 0) continue;
            os << "*" << var_names(sector_, k);
            if (e[static_cast<size_t>(k)] > 1) os << "^" << e[static_cast<size_t>(k)];
        }
    }
    return os.str();
}

NumPoly NumPoly::from(const CoordPoly& f, double q0) {
    NumPoly r(f.sector(), f.convention());
    for (const auto& [e, c] : f.terms()) r.add_term(e, c.eval(q0));
    return r;
}

NumPoly NumPoly::from_at_time(const CoordPoly& f, double q0, double t) {
    NumPoly r(f.sector(), f.convention());
    for (const auto& [e, c] : f.terms()) {
        Exp4 spatial = e;
        spatial[3] = 0;
        r.add_term(spatial, c.eval(q0) * std::pow(t, e[3]));
    }
    return r;
}

void NumPoly::add_term(const Exp4& e, std::complex<double> c) {
    if (c == std::complex<double>(0.0, 0.0)) return;
    terms_[e] += c;
}

std::complex<double> NumPoly::value_at(double y0, double y1, double y2, double t) const {
    std::complex<double> s(0.0, 0.0);
    for (const auto& [e, c] : terms_)
        s += c * std::pow(y0, e[0]) * std::pow(y1, e[1]) * std::pow(y2, e[2]) * std::pow(t, e[3]);
    return s;
}

PhaseSpacePoly PhaseSpacePoly::tensor(const CoordPoly& a, const CoordPoly& b) {
    PhaseSpacePoly r({a.sector(), a.convention()}, {b.sector(), b.convention()});
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(ea, eb, ca * cb);
    return r;
}

QRatio PhaseSpacePoly::coeff(const Exp4& a, const Exp4& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? QRatio() : it->second;
}

void PhaseSpacePoly::add_term(const Exp4& a, const Exp4& b, const QRatio& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PhaseSpacePoly PhaseSpacePoly::operator-() const {
    PhaseSpacePoly r(first_, second_);
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, -c);
    return r;
}

namespace {
void check_same(const PhaseSpacePoly& a, const PhaseSpacePoly& b) {
    if (!(a.first() == b.first()) || !(a.second() == b.second()))
        throw std::invalid_argument("phase-space factor mismatch");
}
}  // namespace

PhaseSpacePoly& PhaseSpacePoly::operator+=(const PhaseSpacePoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        const auto terms = o.terms_;
        first_ = o.first_;
        second_ = o.second_;
        terms_ = terms;
        return *this;
    }
    check_same(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

PhaseSpacePoly& PhaseSpacePoly::operator-=(const PhaseSpacePoly& o) { return *this += -o; }

PhaseSpacePoly& PhaseSpacePoly::operator*=(const QRatio& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
    return *this;
}

bool operator==(const PhaseSpacePoly& a, const PhaseSpacePoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (!(a.first_ == b.first_) || !(a.second_ == b.second_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
        if (ib->first != k || !(ib->second == c)) return false;
        ++ib;
    }
    return true;
}

std::map<Exp4, CoordPoly> PhaseSpacePoly::by_first() const {
    std::map<Exp4, CoordPoly> out;
    for (const auto& [k, c] : terms_) {
        auto it = out.find(k.first);
        if (it == out.end()) it = out.emplace(k.first, CoordPoly(second_.sector, second_.convention)).first;
        it->second.add_term(k.second, c);
    }
    return out;
}

std::map<Exp4, CoordPoly> PhaseSpacePoly::by_second() const {
    std::map<Exp4, CoordPoly> out;
    for (const auto& [k, c] : terms_) {
        auto it = out.find(k.second);
        if (it == out.end()) it = out.emplace(k.second, CoordPoly(first_.sector, first_.convention)).first;
        it->second.add_term(k.first, c);
    }
    return out;
}

PhaseSpacePoly PhaseSpacePoly::truncated_first(int a, int ta) const {
    return filtered([&](const Exp4& x, const Exp4&) { return spatial_degree(x) <= a && x[3] <= ta; });
}

PhaseSpacePoly PhaseSpacePoly::filtered(const std::function<bool(const Exp4&, const Exp4&)>& keep) const {
    PhaseSpacePoly r(first_, second_);
    for (const auto& [k, c] : terms_)
        if (keep(k.first, k.second)) r.terms_.emplace_hint(r.terms_.end(), k, c);
    return r;
}

std::string PhaseSpacePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        for (int j = 0; j < 4; ++j)
            if (k.first[static_cast<size_t>(j)] != 0)
                os << "*" << var_names(first_.sector, j) << "^" << k.first[static_cast<size_t>(j)];
        os << " (x)";
        for (int j = 0; j < 4; ++j)
            if (k.second[static_cast<size_t>(j)] != 0)
                os << " " << var_names(second_.sector, j) << "'^" << k.second[static_cast<size_t>(j)];
    }
    return os.str();
}

}  // namespace qe
