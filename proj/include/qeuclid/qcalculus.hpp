// Jackson derivatives and the partial-derivative actions on CoordPoly.
#pragma once

#include <string>

#include "qeuclid/starcalc.hpp"

namespace qe {

enum class DerivVariant { Plain, Hat };
// Left = |>, LeftBar = |>-bar, Right = <|, RightBar = <|-bar.
enum class ActionSide { Left, LeftBar, Right, RightBar };

struct DerivativeLabel {
    Index index = Index::Plus;
    DerivVariant variant = DerivVariant::Plain;
    ActionSide side = ActionSide::Left;
    bool upper = false;

    // Convention the operand must carry for this action.
    Convention required_convention() const;
    std::string to_string() const;
};

// Shorthand constructors.
DerivativeLabel d_left(Index a, bool upper = false);        // plain, |>
DerivativeLabel dhat_leftbar(Index a, bool upper = false);  // hat, |>-bar
DerivativeLabel d_rightbar(Index a, bool upper = false);    // plain, <|-bar
DerivativeLabel dhat_right(Index a, bool upper = false);    // hat, <|

// D_{q^k, var} on a polynomial: x^n -> [[n]]_{q^k} x^{n-1}.
CoordPoly jackson_derivative(const CoordPoly& f, int var, int k);

// The derivative with respect to one storage variable in the ordering frame of
// f: plain partials on W-ordered input, hatted partials on Wt-ordered input.
// var = 3 is d/dt.
CoordPoly frame_derivative(const CoordPoly& f, int var);

CoordPoly apply_derivative(const DerivativeLabel& label, const CoordPoly& f);
PhaseSpacePoly apply_derivative_first(const DerivativeLabel& label, const PhaseSpacePoly& f);

// Jackson antiderivatives solving d |> F = f, with no constant term in the
// integrated variable. Only left actions (|> or |>-bar) are supported.
CoordPoly inverse_partial(const DerivativeLabel& label, const CoordPoly& f);

// Storage variable differentiated by the natural index position of a sector:
// position sector d_A = d/dx^A, momentum sector d^A = d/dp_A.
int natural_variable(Sector s, Index a);
bool natural_is_upper(Sector s);

}  // namespace qe
