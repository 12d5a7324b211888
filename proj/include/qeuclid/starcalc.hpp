// Star product, quantum-space conjugation and index gymnastics.
#pragma once

#include <vector>

#include "qeuclid/coordpoly.hpp"

namespace qe {

enum class Index { Plus, Three, Minus, Zero };

std::string index_name(Index a);
Index parse_index(const std::string& s);  // "+", "3", "-", "0"
inline constexpr Index kSpatialIndices[3] = {Index::Plus, Index::Three, Index::Minus};

// g_{AB} (equal to g^{AB}); zero unless {A,B} = {+,-} or A = B = 3.
QScalar metric(Index a, Index b);
// The index B with g_{AB} != 0, i.e. the partner used when raising/lowering.
Index metric_partner(Index a);

// One term of a monomial star product: exponent and exact coefficient.
struct StarTerm {
    Exp4 exp;
    QScalar coeff;
};

// Star product of two monomials in a given ordering convention.
void star_monomials(const Exp4& a, const Exp4& b, Convention c, std::vector<StarTerm>& out);

CoordPoly star_product(const CoordPoly& f, const CoordPoly& g);
CoordPoly star_power(const CoordPoly& f, unsigned n);
// Factor-wise star product on phase space (both tensor factors must match).
PhaseSpacePoly star_product(const PhaseSpacePoly& f, const PhaseSpacePoly& g);
// Star product acting only on the second factor: f (x) g  ->  f (x) (g * h).
PhaseSpacePoly star_second_right(const PhaseSpacePoly& f, const CoordPoly& h);
PhaseSpacePoly star_second_left(const CoordPoly& h, const PhaseSpacePoly& f);

// Antilinear, antimultiplicative involution. q and t are real.
CoordPoly conjugate(const CoordPoly& f);
PhaseSpacePoly conjugate(const PhaseSpacePoly& f);

// q -> 1/q together with the exchange of the + and - variables; the
// convention tag flips between W and Wt.
CoordPoly substitute_bar(const CoordPoly& f);
PhaseSpacePoly substitute_bar(const PhaseSpacePoly& f);

// The generators with an index in a given position. Position sector: x^A is
// the natural coordinate, x_A = g_{AB} x^B. Momentum sector: p_A is natural,
// p^A = g^{AB} p_B. Index::Zero gives t (position sector only).
CoordPoly coordinate(Sector s, Convention c, Index a, bool upper);

// raise_index / lower_index act on a triple of polynomials indexed by + 3 -.
using IndexedTriple = std::array<CoordPoly, 3>;
IndexedTriple lower_index(const IndexedTriple& v_upper);
IndexedTriple raise_index(const IndexedTriple& v_lower);
// sum_A v^A * w_A.
CoordPoly metric_contract(const IndexedTriple& v_upper, const IndexedTriple& w_lower);

// p^2 = p^A * p_A in the given convention.
CoordPoly momentum_square(Convention c);

}  // namespace qe
