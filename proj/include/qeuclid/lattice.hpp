// Numeric backend: complex functions sampled on a geometric q-lattice.
//
// Every spatial axis carries the points -q0^j and +q0^j for j in
// [j_min, j_max]. Jackson derivatives, dilations x -> q0^k x and the star
// product with a polynomial only move the index j, so they are exact on the
// lattice; samples that would fall outside the grid read as zero.
#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

#include "qeuclid/qcalculus.hpp"

namespace qe {

using cplx = std::complex<double>;

struct QLattice {
    double q0 = 1.5;
    int j_min = -20;
    int j_max = 20;

    int per_branch() const { return j_max - j_min + 1; }
    int per_axis() const { return 2 * per_branch(); }
    // Axis position i in [0, per_axis): the first half is the negative branch.
    double coordinate(int i) const;
    int branch_of(int i) const { return i < per_branch() ? -1 : +1; }
    int exponent_of(int i) const { return j_min + (i % per_branch()); }
    // Axis position of sign * q0^j, or -1 if it is off the grid.
    int position(int sign, int j) const;
    void validate() const;
};

class LatticeFn {
public:
    LatticeFn() = default;
    LatticeFn(const QLattice& lat, Sector s, Convention c);

    // Samples fn(y0, y1, y2) with y indexed by storage variable.
    static LatticeFn sample(const QLattice& lat, Sector s, Convention c,
                            const std::function<cplx(double, double, double)>& fn);
    static LatticeFn from_poly(const QLattice& lat, const NumPoly& p);

    const QLattice& lattice() const { return lat_; }
    Sector sector() const { return sector_; }
    Convention convention() const { return conv_; }
    LatticeFn with_convention(Convention c) const;

    size_t index(int i0, int i1, int i2) const;
    cplx& at(int i0, int i1, int i2) { return values_[index(i0, i1, i2)]; }
    cplx at(int i0, int i1, int i2) const { return values_[index(i0, i1, i2)]; }
    const std::vector<cplx>& values() const { return values_; }
    std::vector<cplx>& values() { return values_; }

    // g(y) = f(y with y_var -> q0^shift y_var).
    LatticeFn dilated(int var, int shift) const;
    // Pointwise multiplication by a monomial y0^e0 y1^e1 y2^e2.
    LatticeFn times_monomial(int e0, int e1, int e2) const;
    LatticeFn pointwise(const LatticeFn& o) const;

    LatticeFn& operator+=(const LatticeFn& o);
    LatticeFn& operator-=(const LatticeFn& o);
    LatticeFn& operator*=(cplx c);
    friend LatticeFn operator+(LatticeFn a, const LatticeFn& b) { return a += b; }
    friend LatticeFn operator-(LatticeFn a, const LatticeFn& b) { return a -= b; }
    friend LatticeFn operator*(LatticeFn a, cplx c) { return a *= c; }
    friend LatticeFn operator*(cplx c, LatticeFn a) { return a *= c; }

    double max_abs() const;
    void write_csv(std::ostream& os) const;

private:
    void check_compatible(const LatticeFn& o) const;

    QLattice lat_;
    Sector sector_ = Sector::X;
    Convention conv_ = Convention::W;
    std::vector<cplx> values_;
};

// (f(q0^k y) - f(y)) / ((q0^k - 1) y) in one storage variable.
LatticeFn jackson_derivative(const LatticeFn& f, int var, int k);
// Lattice counterpart of frame_derivative on CoordPoly (spatial variables only).
LatticeFn frame_derivative(const LatticeFn& f, int var);
// Spatial derivative actions; the time index is not available on the lattice.
LatticeFn apply_derivative(const DerivativeLabel& label, const LatticeFn& f);
LatticeFn conjugate(const LatticeFn& f);

// Exact star products with one polynomial factor; conventions must agree.
LatticeFn star_product(const NumPoly& p, const LatticeFn& g);
LatticeFn star_product(const LatticeFn& f, const NumPoly& p);

struct IntegralResult {
    cplx value;
    double boundary_mass = 0.0;  // weighted |f| on the outermost layers of the grid
    double total_mass = 0.0;     // weighted |f| over the whole grid
};

// Jackson integral over all space: sum of f times (q0 - 1)^3 |y0 y1 y2|.
// Throws std::domain_error when boundary_mass exceeds boundary_tol * total_mass.
IntegralResult integral_all_space(const LatticeFn& f, double boundary_tol = 1e-12, int boundary_layers = 2);

// Sum of f * g over the lattice with the integration weights.
cplx lattice_pairing(const LatticeFn& f, const LatticeFn& g);

}  // namespace qe
