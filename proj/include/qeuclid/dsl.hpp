// A small expression language over the coordinate algebras.
//
//   sum     := prod (("+" | "-") prod)*
//   prod    := unary ("*" unary)*
//   unary   := "-" unary | DERIV ("|>" | "|>bar") unary | postfix
//   postfix := power (("<|" | "<|bar") DERIV)*
//   power   := primary ("^" INT)?
//   primary := NUMBER | "i" | "q" | "lambda" | "lambda_plus" | "kappa" | COORD
//            | "(" sum ")" | "star" "(" sum ("," sum)+ ")"
//            | ("conj" | "translate" | "translatebar" | "invert" | "invertbar") "(" sum ")"
//            | "exp" "[" VARIANT "]" "(" INT ")"
//            | ("dinv" | "dinvhat") "[" INDEX "]" "(" sum ")"
//            | DERIV "(" sum ")"
//   DERIV   := ("d" | "dhat") "[" INDEX "]",  INDEX := "^"? ("+" | "3" | "-" | "0")
//   COORD   := x+ | x3 | x- | t | p- | p3 | p+
//   NUMBER  := digits ("/" digits)?
//
// "*" and star(...) are star products; d[A](f) means d[A] |> f and
// dhat[A](f) means dhat[A] |>bar f. An index written with "^" is upper.
#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qeuclid/json_io.hpp"
#include "qeuclid/qexp.hpp"

namespace qe {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t offset, int line, int column);
    size_t offset() const { return offset_; }  // 0-based byte offset
    int line() const { return line_; }         // 1-based
    int column() const { return column_; }     // 1-based
    const std::string& message() const { return message_; }

private:
    std::string message_;
    size_t offset_;
    int line_, column_;
};

struct Expr {
    enum class Kind {
        Number, ImagUnit, QSymbol, Lambda, LambdaPlus, Kappa, Coord,
        Neg, Add, Sub, Mul, Pow,
        Star, Conj, Translate, TranslateBar, Invert, InvertBar, Exp,
        Derive, InverseDerive,
    };

    Kind kind = Kind::Number;
    mpq_class number;       // Number (non-negative)
    std::string name;       // Coord name or Exp variant name
    int integer = 0;        // Pow exponent or Exp order
    DerivativeLabel label;  // Derive and InverseDerive
    std::vector<Expr> args;

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
};

Expr parse_expression(const std::string& src);
// Canonical text; parse_expression(print_expression(e)) == e.
std::string print_expression(const Expr& e);
Json expression_to_json(const Expr& e);

using Value = std::variant<QRatio, CoordPoly, PhaseSpacePoly>;

struct EvalOptions {
    Convention convention = Convention::W;  // ordering used for coordinate literals
};

// Exact evaluation. Operands are rewritten into the ordering an operation
// needs. Products and sums that mix position and momentum coordinates
// become x (x) p series; unsupported combinations throw std::invalid_argument.
Value evaluate(const Expr& e, const EvalOptions& opts = {});
std::string value_to_string(const Value& v);
Json value_to_json(const Value& v);

}  // namespace qe
