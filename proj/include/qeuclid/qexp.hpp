// Truncated q-exponentials, q-translations and q-inversions.
//
// Exponentials are PhaseSpacePoly objects with the position factor first and
// the momentum factor second. Translations f(x (+) y) are PhaseSpacePoly
// objects whose two factors are both position-sector copies (x first, y second).
#pragma once

#include <string>
#include <vector>

#include "qeuclid/qcalculus.hpp"

namespace qe {

enum class ExpVariant {
    XP,       // exp(x | i p)
    PX,       // exp(i^-1 p | x)
    XPBar,    // q -> 1/q image of XP
    PXBar,    // q -> 1/q image of PX
    StarPX,   // exp*(i p | x), equal to PXBar with p -> q^6 p
    StarXP,   // exp*(x | i^-1 p), equal to XPBar with p -> q^6 p
};

std::string variant_name(ExpVariant v);  // "xp", "px", "xpbar", "pxbar", "starpx", "starxp"
ExpVariant parse_variant(const std::string& s);
inline constexpr ExpVariant kAllVariants[6] = {ExpVariant::XP,    ExpVariant::PX,     ExpVariant::XPBar,
                                               ExpVariant::PXBar, ExpVariant::StarPX, ExpVariant::StarXP};

struct QExponential {
    ExpVariant variant = ExpVariant::XP;
    int order = 0;  // terms with position degree <= order
    PhaseSpacePoly body;
};

QExponential build_exponential(ExpVariant v, int order);

// The defining eigenvalue equation written as (lhs - rhs):
//   XP:     i^-1 d^A |> e - e * p^A
//   PX:     i^-1 (e <|bar d^A) - p^A * e
//   XPBar:  i^-1 dhat^A |>bar e - e * p^A
//   PXBar:  i^-1 (e <| dhat^A) - p^A * e
//   StarPX: e <| d^A - i p^A * e
//   StarXP: d^A |>bar e - e * i p^A
// Only the truncation shell (position degree == order) may survive.
PhaseSpacePoly eigen_residual(const QExponential& e, Index a);

// Position degree strictly below `order` restricted to zero?
bool vanishes_below_shell(const PhaseSpacePoly& r, int order);

// Evaluations of the normalization conditions: e at x = 0 and at p = 0.
CoordPoly exponential_at_zero_position(const QExponential& e);
CoordPoly exponential_at_zero_momentum(const QExponential& e);

enum class Translation {
    Plus,     // f(x (+) y), W~-ordered operands
    PlusBar,  // f(x (+)bar y), W-ordered operands
};

// Order in which a momentum word p_{a1} p_{a2} ... becomes a derivative word:
// RightmostFirst applies the rightmost derivative first.
enum class WordOrder { RightmostFirst, LeftmostFirst };

// The explicit quadruple-sum formula for f(x (+) y). f must be W~-ordered.
PhaseSpacePoly q_translate(const CoordPoly& f);
// exp(x | d_y) |> f(y) for PlusBar, expbar(x | dhat_y) |>bar f(y) for Plus.
PhaseSpacePoly q_translate_by_exponential(const CoordPoly& f, Translation t,
                                          WordOrder order = WordOrder::RightmostFirst);
// Dispatches to the explicit formula (Plus) or the exponential route (PlusBar).
PhaseSpacePoly q_translate(const CoordPoly& f, Translation t);

// U f and U^-1 f from their explicit series. U^-1 rewrites a W~-ordered
// representative into the W-ordered one, U does the reverse.
CoordPoly u_operator(const CoordPoly& f);
CoordPoly u_inverse_operator(const CoordPoly& f);

// f(-)x) for Plus (W~ in, W~ out) and f((-)bar x) for PlusBar (W in, W out).
CoordPoly q_invert(const CoordPoly& f, Translation t);

// m o (S (x) id) applied to a translation result, and m o (id (x) S).
CoordPoly antipode_left(const PhaseSpacePoly& delta, Translation t);
CoordPoly antipode_right(const PhaseSpacePoly& delta, Translation t);

// Constant term f(0) as a CoordPoly of the same sector/convention.
CoordPoly counit(const CoordPoly& f);

// Restrict one factor of a translation result to zero.
CoordPoly set_second_zero(const PhaseSpacePoly& delta);
CoordPoly set_first_zero(const PhaseSpacePoly& delta);

// Three-factor element x (x) y (x) p used by the addition theorem.
struct TriplePoly {
    std::map<std::array<Exp4, 3>, QRatio> terms;
    void add_term(const Exp4& a, const Exp4& b, const Exp4& c, const QRatio& v);
    friend bool operator==(const TriplePoly& a, const TriplePoly& b);
    TriplePoly truncated(int max_xy_degree) const;
};

// exp(x (+)bar y | i p) built from the translated position monomials, and the
// composition exp(x | exp(y | i p) * i p) with the y-exponential's momentum
// part multiplied in from the left. Both are truncated at x+y degree <= order.
TriplePoly addition_lhs(int order);
TriplePoly addition_rhs(int order);

// sum over the two exponential factors of (x^n * S(x^m)) (x) (p^m * p^n), the
// product exp(x | i p) exp((-)bar x | i p) composed through the addition theorem.
PhaseSpacePoly inverse_exponential_product(int order);

}  // namespace qe
