#include "qeuclid/lattice.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qe {

double QLattice::coordinate(int i) const { return branch_of(i) * std::pow(q0, exponent_of(i)); }

int QLattice::position(int sign, int j) const {
    if (j < j_min || j > j_max) return -1;
    return (sign < 0 ? 0 : per_branch()) + (j - j_min);
}

void QLattice::validate() const {
    if (!(q0 > 1.0)) throw std::invalid_argument("lattice base q0 must exceed 1");
    if (j_max < j_min) throw std::invalid_argument("lattice range is empty");
}

LatticeFn::LatticeFn(const QLattice& lat, Sector s, Convention c) : lat_(lat), sector_(s), conv_(c) {
    lat_.validate();
    const size_t n = static_cast<size_t>(lat_.per_axis());
    values_.assign(n * n * n, cplx(0.0, 0.0));
}

size_t LatticeFn::index(int i0, int i1, int i2) const {
    const size_t n = static_cast<size_t>(lat_.per_axis());
    return (static_cast<size_t>(i0) * n + static_cast<size_t>(i1)) * n + static_cast<size_t>(i2);
}

LatticeFn LatticeFn::sample(const QLattice& lat, Sector s, Convention c,
                            const std::function<cplx(double, double, double)>& fn) {
    LatticeFn r(lat, s, c);
    const int n = lat.per_axis();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) r.at(a, b, d) = fn(lat.coordinate(a), lat.coordinate(b), lat.coordinate(d));
    return r;
}

LatticeFn LatticeFn::from_poly(const QLattice& lat, const NumPoly& p) {
    return sample(lat, p.sector(), p.convention(), [&p](double a, double b, double c) { return p.value_at(a, b, c); });
}

LatticeFn LatticeFn::with_convention(Convention c) const {
    LatticeFn r = *this;
    r.conv_ = c;
    return r;
}

LatticeFn LatticeFn::dilated(int var, int shift) const {
    if (var < 0 || var > 2) throw std::invalid_argument("dilated: spatial variable expected");
    LatticeFn r(lat_, sector_, conv_);
    const int n = lat_.per_axis();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                int idx[3] = {a, b, d};
                const int moved = lat_.position(lat_.branch_of(idx[var]), lat_.exponent_of(idx[var]) + shift);
                if (moved < 0) continue;
                idx[var] = moved;
                r.at(a, b, d) = at(idx[0], idx[1], idx[2]);
            }
    return r;
}

LatticeFn LatticeFn::times_monomial(int e0, int e1, int e2) const {
    LatticeFn r = *this;
    const int n = lat_.per_axis();
    std::vector<double> p0(static_cast<size_t>(n)), p1(p0), p2(p0);
    for (int i = 0; i < n; ++i) {
        const double c = lat_.coordinate(i);
        p0[static_cast<size_t>(i)] = std::pow(c, e0);
        p1[static_cast<size_t>(i)] = std::pow(c, e1);
        p2[static_cast<size_t>(i)] = std::pow(c, e2);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d)
                r.at(a, b, d) *= p0[static_cast<size_t>(a)] * p1[static_cast<size_t>(b)] * p2[static_cast<size_t>(d)];
    return r;
}

void LatticeFn::check_compatible(const LatticeFn& o) const {
    if (o.lat_.q0 != lat_.q0 || o.lat_.j_min != lat_.j_min || o.lat_.j_max != lat_.j_max)
        throw std::invalid_argument("lattice functions live on different grids");
    if (o.sector_ != sector_ || o.conv_ != conv_)
        throw std::invalid_argument("lattice functions differ in sector or convention");
}

LatticeFn LatticeFn::pointwise(const LatticeFn& o) const {
    check_compatible(o);
    LatticeFn r = *this;
    for (size_t i = 0; i < values_.size(); ++i) r.values_[i] *= o.values_[i];
    return r;
}

LatticeFn& LatticeFn::operator+=(const LatticeFn& o) {
    check_compatible(o);
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

LatticeFn& LatticeFn::operator-=(const LatticeFn& o) {
    check_compatible(o);
    for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

LatticeFn& LatticeFn::operator*=(cplx c) {
    for (auto& v : values_) v *= c;
    return *this;
}

double LatticeFn::max_abs() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

void LatticeFn::write_csv(std::ostream& os) const {
    const bool x = sector_ == Sector::X;
    os << (x ? "x+,x3,x-" : "p-,p3,p+") << ",re,im\n";
    os.precision(17);
    const int n = lat_.per_axis();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                const cplx v = at(a, b, d);
                os << lat_.coordinate(a) << ',' << lat_.coordinate(b) << ',' << lat_.coordinate(d) << ',' << v.real()
                   << ',' << v.imag() << '\n';
            }
}

LatticeFn jackson_derivative(const LatticeFn& f, int var, int k) {
    if (k == 0) throw std::invalid_argument("jackson_derivative: k must be nonzero");
    const QLattice& lat = f.lattice();
    LatticeFn r = f.dilated(var, k);
    r -= f;
    const double qk = std::pow(lat.q0, k) - 1.0;
    const int n = lat.per_axis();
    std::vector<double> inv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i)] = 1.0 / (qk * lat.coordinate(i));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                const int idx[3] = {a, b, d};
                r.at(a, b, d) *= inv[static_cast<size_t>(idx[var])];
            }
    return r;
}

namespace {

double q_number_numeric(int n, double base) {
    double s = 0.0, p = 1.0;
    for (int i = 0; i < n; ++i, p *= base) s += p;
    return s;
}

int slot_of(const SlotFrame& fr, int var) {
    for (int s = 0; s < 3; ++s)
        if (fr.var[static_cast<size_t>(s)] == var) return s;
    throw std::invalid_argument("variable not in frame");
}

// Pointwise multiplication by y_var^e, via times_monomial.
LatticeFn times_variable(const LatticeFn& f, int var, int e) {
    int ex[3] = {0, 0, 0};
    ex[var] = e;
    return f.times_monomial(ex[0], ex[1], ex[2]);
}

}  // namespace

LatticeFn frame_derivative(const LatticeFn& f, int var) {
    const SlotFrame fr = slot_frame(f.convention());
    const int qs = fr.qsign;
    const int y1 = fr.var[0], y2 = fr.var[1], y3 = fr.var[2];
    switch (slot_of(fr, var)) {
        case 0: return jackson_derivative(f, y1, 4 * qs);
        case 1: return jackson_derivative(f.dilated(y1, 2 * qs), y2, 2 * qs);
        default: {
            const double Q = std::pow(f.lattice().q0, qs);
            LatticeFn r = jackson_derivative(f.dilated(y2, 2 * qs), y3, 4 * qs);
            LatticeFn corr = jackson_derivative(jackson_derivative(f, y2, 2 * qs), y2, 2 * qs);
            r += times_variable(corr, y1, 1) * cplx(Q - 1.0 / Q);
            return r;
        }
    }
}

LatticeFn conjugate(const LatticeFn& f) {
    // x sector: conj(f)(X, Y, Z) = conj f(-q Z, Y, -X/q); momentum sector with q -> 1/q.
    const QLattice& lat = f.lattice();
    const int s = f.sector() == Sector::X ? 1 : -1;
    LatticeFn r(lat, f.sector(), f.convention());
    const int n = lat.per_axis();
    for (int a = 0; a < n; ++a) {
        const int first = lat.position(-lat.branch_of(a), lat.exponent_of(a) - s);  // -q^{-s} X
        for (int d = 0; d < n; ++d) {
            const int zero = lat.position(-lat.branch_of(d), lat.exponent_of(d) + s);  // -q^{s} Z
            if (first < 0 || zero < 0) continue;
            for (int b = 0; b < n; ++b) r.at(a, b, d) = std::conj(f.at(zero, b, first));
        }
    }
    return r;
}

namespace {

LatticeFn natural_left(const LatticeFn& f, Index a, bool upper) {
    if (upper == natural_is_upper(f.sector())) return frame_derivative(f, natural_variable(f.sector(), a));
    const Index b = metric_partner(a);
    return frame_derivative(f, natural_variable(f.sector(), b)) * metric(a, b).eval(f.lattice().q0);
}

}  // namespace

LatticeFn apply_derivative(const DerivativeLabel& label, const LatticeFn& f) {
    if (label.index == Index::Zero) throw std::invalid_argument("time derivatives are not defined on the lattice");
    if (f.convention() != label.required_convention())
        throw std::invalid_argument("derivative " + label.to_string() + " requires " +
                                    convention_name(label.required_convention()) + "-ordered input");
    const double q6 = std::pow(f.lattice().q0, 6);
    switch (label.side) {
        case ActionSide::Left: {
            LatticeFn r = natural_left(f, label.index, label.upper);
            return label.variant == DerivVariant::Hat ? r * cplx(q6) : r;
        }
        case ActionSide::LeftBar: {
            LatticeFn r = natural_left(f, label.index, label.upper);
            return label.variant == DerivVariant::Plain ? r * cplx(1.0 / q6) : r;
        }
        case ActionSide::RightBar: {
            LatticeFn r = conjugate(natural_left(conjugate(f), label.index, !label.upper)) * cplx(-1.0);
            return label.variant == DerivVariant::Hat ? r * cplx(q6) : r;
        }
        case ActionSide::Right: {
            LatticeFn r = conjugate(natural_left(conjugate(f), label.index, !label.upper)) * cplx(-1.0);
            return label.variant == DerivVariant::Plain ? r * cplx(1.0 / q6) : r;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

void check_star_operands(const NumPoly& p, const LatticeFn& g) {
    if (p.sector() != g.sector() || p.convention() != g.convention())
        throw std::invalid_argument("lattice star product: sector/convention mismatch");
    for (const auto& [e, c] : p.terms())
        if (e[3] != 0) throw std::invalid_argument("lattice star product: polynomial must be time independent");
}

// Coefficient lambda_Q^k [a]_{Q^4} [a-1]_{Q^4} ... [a-k+1]_{Q^4} / [k]_{Q^4}!.
double binomial_weight(int a, int k, double Q) {
    const double Q4 = std::pow(Q, 4);
    double w = 1.0;
    for (int i = 0; i < k; ++i) w *= (Q - 1.0 / Q) * q_number_numeric(a - i, Q4) / q_number_numeric(i + 1, Q4);
    return w;
}

}  // namespace

LatticeFn star_product(const NumPoly& p, const LatticeFn& g) {
    check_star_operands(p, g);
    const SlotFrame fr = slot_frame(g.convention());
    const int qs = fr.qsign;
    const double Q = std::pow(g.lattice().q0, qs);
    const int y1 = fr.var[0], y2 = fr.var[1], y3 = fr.var[2];
    std::vector<LatticeFn> derivs{g};  // D^k_{Q^4, y1} g
    LatticeFn r(g.lattice(), g.sector(), g.convention());
    for (const auto& [e, c] : p.terms()) {
        const int a2 = e[static_cast<size_t>(y2)], a3 = e[static_cast<size_t>(y3)];
        for (int k = 0; k <= a3; ++k) {
            while (static_cast<int>(derivs.size()) <= k) derivs.push_back(jackson_derivative(derivs.back(), y1, 4 * qs));
            LatticeFn t = derivs[static_cast<size_t>(k)].dilated(y1, 2 * qs * a2).dilated(y2, 2 * qs * (a3 - k));
            int ex[3] = {e[0], e[1], e[2]};
            ex[y2] += 2 * k;
            ex[y3] -= k;
            r += t.times_monomial(ex[0], ex[1], ex[2]) * (c * binomial_weight(a3, k, Q));
        }
    }
    return r;
}

LatticeFn star_product(const LatticeFn& f, const NumPoly& p) {
    check_star_operands(p, f);
    const SlotFrame fr = slot_frame(f.convention());
    const int qs = fr.qsign;
    const double Q = std::pow(f.lattice().q0, qs);
    const int y1 = fr.var[0], y2 = fr.var[1], y3 = fr.var[2];
    std::vector<LatticeFn> derivs{f};  // D^k_{Q^4, y3} f
    LatticeFn r(f.lattice(), f.sector(), f.convention());
    for (const auto& [e, c] : p.terms()) {
        const int b1 = e[static_cast<size_t>(y1)], b2 = e[static_cast<size_t>(y2)];
        for (int k = 0; k <= b1; ++k) {
            while (static_cast<int>(derivs.size()) <= k) derivs.push_back(jackson_derivative(derivs.back(), y3, 4 * qs));
            LatticeFn t = derivs[static_cast<size_t>(k)].dilated(y2, 2 * qs * (b1 - k)).dilated(y3, 2 * qs * b2);
            int ex[3] = {e[0], e[1], e[2]};
            ex[y1] -= k;
            ex[y2] += 2 * k;
            r += t.times_monomial(ex[0], ex[1], ex[2]) * (c * binomial_weight(b1, k, Q));
        }
    }
    return r;
}

namespace {

std::vector<double> axis_weights(const QLattice& lat) {
    std::vector<double> w(static_cast<size_t>(lat.per_axis()));
    for (int i = 0; i < lat.per_axis(); ++i) w[static_cast<size_t>(i)] = (lat.q0 - 1.0) * std::abs(lat.coordinate(i));
    return w;
}

}  // namespace

IntegralResult integral_all_space(const LatticeFn& f, double boundary_tol, int boundary_layers) {
    const QLattice& lat = f.lattice();
    const std::vector<double> w = axis_weights(lat);
    const int n = lat.per_axis();
    auto near_edge = [&](int i) {
        const int j = lat.exponent_of(i);
        return j < lat.j_min + boundary_layers || j > lat.j_max - boundary_layers;
    };
    IntegralResult res{};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int d = 0; d < n; ++d) {
                const double wt = w[static_cast<size_t>(a)] * w[static_cast<size_t>(b)] * w[static_cast<size_t>(d)];
                const cplx v = f.at(a, b, d) * wt;
                res.value += v;
                res.total_mass += std::abs(v);
                if (near_edge(a) || near_edge(b) || near_edge(d)) res.boundary_mass += std::abs(v);
            }
    if (res.boundary_mass > boundary_tol * res.total_mass)
        throw std::domain_error("integrand does not decay at the lattice boundary: boundary mass " +
                                std::to_string(res.boundary_mass) + " of total " + std::to_string(res.total_mass));
    return res;
}

cplx lattice_pairing(const LatticeFn& f, const LatticeFn& g) { return integral_all_space(f.pointwise(g)).value; }

}  // namespace qe
