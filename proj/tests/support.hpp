// Small builders shared by the unit tests.
#pragma once

#include <complex>
#include <string>

#include "qeuclid/schrodinger.hpp"

namespace qe::test {

inline QScalar q(int e = 1) { return QScalar::q_pow(e); }
inline QRatio rq(int e) { return QRatio(QScalar::q_pow(e)); }
inline QRatio ri() { return QRatio(GaussRat::i_unit()); }

inline CoordPoly x(int var, Convention c = Convention::W) { return CoordPoly::variable(Sector::X, c, var); }
inline CoordPoly p(int var, Convention c = Convention::W) { return CoordPoly::variable(Sector::P, c, var); }
inline CoordPoly one(Sector s = Sector::X, Convention c = Convention::W) { return CoordPoly::constant(s, c, QRatio(1)); }

// Storage indices: position (x+, x3, x-, t), momentum (p-, p3, p+).
inline constexpr int kXPlus = 0, kX3 = 1, kXMinus = 2, kT = 3;
inline constexpr int kPMinus = 0, kP3 = 1, kPPlus = 2;

inline CoordPoly operator*(const CoordPoly& a, const CoordPoly& b) { return a.commutative_product(b); }

}  // namespace qe::test
