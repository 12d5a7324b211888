#include "qeuclid/dsl.hpp"

#include <cctype>
#include <sstream>

#include "qeuclid/ncalgebra.hpp"

namespace qe {

ParseError::ParseError(const std::string& message, size_t offset, int line, int column)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + " (line " + std::to_string(line) +
                         ", column " + std::to_string(column) + "): " + message),
      message_(message),
      offset_(offset),
      line_(line),
      column_(column) {}

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.args != b.args) return false;
    switch (a.kind) {
        case Expr::Kind::Number: return a.number == b.number;
        case Expr::Kind::Coord: return a.name == b.name;
        case Expr::Kind::Pow: return a.integer == b.integer;
        case Expr::Kind::Exp: return a.name == b.name && a.integer == b.integer;
        case Expr::Kind::Derive:
        case Expr::Kind::InverseDerive:
            return a.label.index == b.label.index && a.label.variant == b.label.variant &&
                   a.label.side == b.label.side && a.label.upper == b.label.upper;
        default: return true;
    }
}

namespace {

// ---------------------------------------------------------------- lexer

enum class Tok {
    Number, Ident, Coord, LParen, RParen, LBracket, RBracket, Comma,
    Plus, Minus, Times, Caret, Act, ActBar, RAct, RActBar, End,
};

struct Token {
    Tok type;
    std::string text;
    size_t offset;
};

std::string describe(const Token& t) {
    switch (t.type) {
        case Tok::End: return "end of input";
        case Tok::Number: return "number '" + t.text + "'";
        case Tok::Ident: return "identifier '" + t.text + "'";
        case Tok::Coord: return "coordinate '" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    [[noreturn]] void fail(const std::string& msg, size_t offset) const {
        int line = 1, col = 1;
        for (size_t k = 0; k < offset && k < src_.size(); ++k) {
            if (src_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, offset, line, col);
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        size_t k = 0;
        const size_t n = src_.size();
        auto starts = [&](size_t at, const char* s) { return src_.compare(at, std::char_traits<char>::length(s), s) == 0; };
        while (true) {
            while (k < n && std::isspace(static_cast<unsigned char>(src_[k]))) ++k;
            if (k >= n) {
                out.push_back({Tok::End, "", n});
                return out;
            }
            const size_t start = k;
            const char c = src_[k];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                while (k < n && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
                if (k + 1 < n && src_[k] == '/' && std::isdigit(static_cast<unsigned char>(src_[k + 1]))) {
                    ++k;
                    while (k < n && std::isdigit(static_cast<unsigned char>(src_[k]))) ++k;
                }
                out.push_back({Tok::Number, src_.substr(start, k - start), start});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                while (k < n && (std::isalpha(static_cast<unsigned char>(src_[k])) || src_[k] == '_')) ++k;
                std::string word = src_.substr(start, k - start);
                if (word == "t") {
                    out.push_back({Tok::Coord, word, start});
                } else if (word == "x" || word == "p") {
                    if (k < n && (src_[k] == '+' || src_[k] == '-' || src_[k] == '3')) {
                        out.push_back({Tok::Coord, word + src_[k], start});
                        ++k;
                    } else {
                        fail("unknown identifier '" + word + "' (coordinates are x+, x3, x-, t, p-, p3, p+)", start);
                    }
                } else {
                    out.push_back({Tok::Ident, word, start});
                }
                continue;
            }
            if (starts(k, "|>bar")) {
                out.push_back({Tok::ActBar, "|>bar", start});
                k += 5;
            } else if (starts(k, "|>")) {
                out.push_back({Tok::Act, "|>", start});
                k += 2;
            } else if (starts(k, "<|bar")) {
                out.push_back({Tok::RActBar, "<|bar", start});
                k += 5;
            } else if (starts(k, "<|")) {
                out.push_back({Tok::RAct, "<|", start});
                k += 2;
            } else {
                Tok t;
                switch (c) {
                    case '(': t = Tok::LParen; break;
                    case ')': t = Tok::RParen; break;
                    case '[': t = Tok::LBracket; break;
                    case ']': t = Tok::RBracket; break;
                    case ',': t = Tok::Comma; break;
                    case '+': t = Tok::Plus; break;
                    case '-': t = Tok::Minus; break;
                    case '*': t = Tok::Times; break;
                    case '^': t = Tok::Caret; break;
                    default: fail(std::string("unexpected character '") + c + "'", start);
                }
                out.push_back({t, std::string(1, c), start});
                ++k;
            }
        }
    }

private:
    const std::string& src_;
};

// ---------------------------------------------------------------- parser

Expr make(Expr::Kind k, std::vector<Expr> args = {}) {
    Expr e;
    e.kind = k;
    e.args = std::move(args);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src), toks_(lex_.run()) {}

    Expr parse() {
        Expr e = sum();
        if (peek().type != Tok::End) fail("expected end of input, found " + describe(peek()));
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    [[noreturn]] void fail(const std::string& msg) const { lex_.fail(msg, peek().offset); }

    void expect(Tok t, const char* what) {
        if (peek().type != t) fail(std::string("expected ") + what + ", found " + describe(peek()));
        next();
    }

    Expr sum() {
        Expr e = prod();
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            const Expr::Kind k = next().type == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
            e = make(k, {std::move(e), prod()});
        }
        return e;
    }

    Expr prod() {
        Expr e = unary();
        while (peek().type == Tok::Times) {
            next();
            e = make(Expr::Kind::Mul, {std::move(e), unary()});
        }
        return e;
    }

    static bool is_deriv_word(const Token& t) { return t.type == Tok::Ident && (t.text == "d" || t.text == "dhat"); }

    Expr unary() {
        if (peek().type == Tok::Minus) {
            next();
            return make(Expr::Kind::Neg, {unary()});
        }
        if (is_deriv_word(peek())) {
            DerivativeLabel label = deriv_spec();
            if (peek().type == Tok::Act || peek().type == Tok::ActBar) {
                label.side = next().type == Tok::Act ? ActionSide::Left : ActionSide::LeftBar;
                Expr e = make(Expr::Kind::Derive, {unary()});
                e.label = label;
                return e;
            }
            if (peek().type != Tok::LParen)
                fail("expected '(', '|>' or '|>bar' after derivative, found " + describe(peek()));
            return postfix_tail(power_tail(derive_call(label)));
        }
        return postfix_tail(power_tail(primary()));
    }

    Expr derive_call(DerivativeLabel label) {
        label.side = label.variant == DerivVariant::Plain ? ActionSide::Left : ActionSide::LeftBar;
        expect(Tok::LParen, "'('");
        Expr e = make(Expr::Kind::Derive, {sum()});
        expect(Tok::RParen, "')'");
        e.label = label;
        return e;
    }

    Expr postfix_tail(Expr e) {
        while (peek().type == Tok::RAct || peek().type == Tok::RActBar) {
            const bool bar = next().type == Tok::RActBar;
            if (!is_deriv_word(peek())) fail("expected derivative after right action, found " + describe(peek()));
            DerivativeLabel label = deriv_spec();
            label.side = bar ? ActionSide::RightBar : ActionSide::Right;
            Expr r = make(Expr::Kind::Derive, {std::move(e)});
            r.label = label;
            e = std::move(r);
        }
        return e;
    }

    Expr power_tail(Expr e) {
        if (peek().type != Tok::Caret) return e;
        next();
        if (peek().type != Tok::Number || peek().text.find('/') != std::string::npos)
            fail("expected integer exponent, found " + describe(peek()));
        Expr p = make(Expr::Kind::Pow, {std::move(e)});
        p.integer = small_int(next());
        return p;
    }

    int small_int(const Token& t) {
        if (t.text.size() > 6) lex_.fail("integer too large", t.offset);
        return std::stoi(t.text);
    }

    Index index_spec(bool& upper) {
        expect(Tok::LBracket, "'['");
        upper = false;
        if (peek().type == Tok::Caret) {
            next();
            upper = true;
        }
        Index a;
        const Token& t = peek();
        if (t.type == Tok::Plus) {
            a = Index::Plus;
        } else if (t.type == Tok::Minus) {
            a = Index::Minus;
        } else if (t.type == Tok::Number && t.text == "3") {
            a = Index::Three;
        } else if (t.type == Tok::Number && t.text == "0") {
            a = Index::Zero;
        } else {
            fail("expected index +, 3, - or 0, found " + describe(t));
        }
        next();
        expect(Tok::RBracket, "']'");
        return a;
    }

    DerivativeLabel deriv_spec() {
        const Token word = next();
        DerivativeLabel label;
        label.variant = word.text == "dhat" ? DerivVariant::Hat : DerivVariant::Plain;
        label.index = index_spec(label.upper);
        return label;
    }

    Expr unary_call(Expr::Kind k) {
        expect(Tok::LParen, "'('");
        Expr e = make(k, {sum()});
        expect(Tok::RParen, "')'");
        return e;
    }

    Expr primary() {
        const Token t = peek();
        switch (t.type) {
            case Tok::Number: {
                next();
                Expr e = make(Expr::Kind::Number);
                e.number = rational_from_string(t.text);
                return e;
            }
            case Tok::Coord: {
                next();
                Expr e = make(Expr::Kind::Coord);
                e.name = t.text;
                return e;
            }
            case Tok::LParen: {
                next();
                Expr e = sum();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident: break;
            default: fail("expected expression, found " + describe(t));
        }
        next();
        const std::string& w = t.text;
        if (w == "i") return make(Expr::Kind::ImagUnit);
        if (w == "q") return make(Expr::Kind::QSymbol);
        if (w == "lambda") return make(Expr::Kind::Lambda);
        if (w == "lambda_plus") return make(Expr::Kind::LambdaPlus);
        if (w == "kappa") return make(Expr::Kind::Kappa);
        if (w == "conj") return unary_call(Expr::Kind::Conj);
        if (w == "translate") return unary_call(Expr::Kind::Translate);
        if (w == "translatebar") return unary_call(Expr::Kind::TranslateBar);
        if (w == "invert") return unary_call(Expr::Kind::Invert);
        if (w == "invertbar") return unary_call(Expr::Kind::InvertBar);
        if (w == "star") {
            expect(Tok::LParen, "'('");
            Expr e = make(Expr::Kind::Star, {sum()});
            do {
                expect(Tok::Comma, "','");
                e.args.push_back(sum());
            } while (peek().type == Tok::Comma);
            expect(Tok::RParen, "')'");
            return e;
        }
        if (w == "exp") {
            expect(Tok::LBracket, "'['");
            if (peek().type != Tok::Ident) fail("expected exponential variant, found " + describe(peek()));
            const Token v = next();
            try {
                parse_variant(v.text);
            } catch (const std::invalid_argument&) {
                lex_.fail("unknown exponential variant '" + v.text + "'", v.offset);
            }
            expect(Tok::RBracket, "']'");
            expect(Tok::LParen, "'('");
            if (peek().type != Tok::Number || peek().text.find('/') != std::string::npos)
                fail("expected integer order, found " + describe(peek()));
            Expr e = make(Expr::Kind::Exp);
            e.name = v.text;
            e.integer = small_int(next());
            expect(Tok::RParen, "')'");
            return e;
        }
        if (w == "dinv" || w == "dinvhat") {
            DerivativeLabel label;
            label.variant = w == "dinv" ? DerivVariant::Plain : DerivVariant::Hat;
            label.side = w == "dinv" ? ActionSide::Left : ActionSide::LeftBar;
            label.index = index_spec(label.upper);
            Expr e = unary_call(Expr::Kind::InverseDerive);
            e.label = label;
            return e;
        }
        lex_.fail("unknown identifier '" + w + "'", t.offset);
    }

    Lexer lex_;
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

// ---------------------------------------------------------------- printer

// Binding strength: sum 1, product 2, unary 3, postfix 4, power 5, primary 6.
int level(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Derive:
            return e.label.side == ActionSide::Left || e.label.side == ActionSide::LeftBar ? 3 : 4;
        case Expr::Kind::Pow: return 5;
        default: return 6;
    }
}

std::string index_text(const DerivativeLabel& l) {
    return "[" + std::string(l.upper ? "^" : "") + index_name(l.index) + "]";
}

std::string deriv_text(const DerivativeLabel& l) {
    return (l.variant == DerivVariant::Plain ? "d" : "dhat") + index_text(l);
}

void print(const Expr& e, std::ostream& os);

void print_at(const Expr& e, int min_level, std::ostream& os) {
    if (level(e) < min_level) {
        os << '(';
        print(e, os);
        os << ')';
    } else {
        print(e, os);
    }
}

void print(const Expr& e, std::ostream& os) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number: os << e.number.get_str(); return;
        case K::ImagUnit: os << "i"; return;
        case K::QSymbol: os << "q"; return;
        case K::Lambda: os << "lambda"; return;
        case K::LambdaPlus: os << "lambda_plus"; return;
        case K::Kappa: os << "kappa"; return;
        case K::Coord: os << e.name; return;
        case K::Neg:
            os << '-';
            print_at(e.args[0], 3, os);
            return;
        case K::Add:
        case K::Sub:
            print_at(e.args[0], 1, os);
            os << (e.kind == K::Add ? " + " : " - ");
            print_at(e.args[1], 2, os);
            return;
        case K::Mul:
            print_at(e.args[0], 2, os);
            os << " * ";
            print_at(e.args[1], 3, os);
            return;
        case K::Pow:
            print_at(e.args[0], 6, os);
            os << '^' << e.integer;
            return;
        case K::Star:
            os << "star(";
            for (size_t k = 0; k < e.args.size(); ++k) {
                if (k) os << ", ";
                print(e.args[k], os);
            }
            os << ')';
            return;
        case K::Conj:
        case K::Translate:
        case K::TranslateBar:
        case K::Invert:
        case K::InvertBar: {
            static const char* names[] = {"conj", "translate", "translatebar", "invert", "invertbar"};
            os << names[static_cast<int>(e.kind) - static_cast<int>(K::Conj)] << '(';
            print(e.args[0], os);
            os << ')';
            return;
        }
        case K::Exp: os << "exp[" << e.name << "](" << e.integer << ")"; return;
        case K::InverseDerive:
            os << (e.label.variant == DerivVariant::Plain ? "dinv" : "dinvhat") << index_text(e.label) << '(';
            print(e.args[0], os);
            os << ')';
            return;
        case K::Derive:
            switch (e.label.side) {
                case ActionSide::Left:
                case ActionSide::LeftBar:
                    os << deriv_text(e.label) << (e.label.side == ActionSide::Left ? " |> " : " |>bar ");
                    print_at(e.args[0], 3, os);
                    return;
                case ActionSide::Right:
                case ActionSide::RightBar:
                    print_at(e.args[0], 4, os);
                    os << (e.label.side == ActionSide::Right ? " <| " : " <|bar ") << deriv_text(e.label);
                    return;
            }
    }
}

const char* kind_name(Expr::Kind k) {
    static const char* names[] = {"number", "i", "q", "lambda", "lambda_plus", "kappa", "coord",
                                  "neg", "add", "sub", "mul", "pow",
                                  "star", "conj", "translate", "translatebar", "invert", "invertbar", "exp",
                                  "derive", "inverse_derive"};
    return names[static_cast<int>(k)];
}

// ---------------------------------------------------------------- evaluator

struct Coordinate {
    Sector sector;
    int var;
};

Coordinate coordinate_of(const std::string& name) {
    if (name == "t") return {Sector::X, 3};
    const Sector s = name[0] == 'x' ? Sector::X : Sector::P;
    const char c = name[1];
    if (c == '3') return {s, 1};
    if (s == Sector::X) return {s, c == '+' ? 0 : 2};
    return {s, c == '-' ? 0 : 2};
}

CoordPoly in_convention(const CoordPoly& f, Convention c) {
    return f.convention() == c ? f : convert_convention(f, c);
}

class Evaluator {
public:
    explicit Evaluator(const EvalOptions& o) : opts_(o) {}

    Value eval(const Expr& e) {
        using K = Expr::Kind;
        switch (e.kind) {
            case K::Number: return QRatio(GaussRat(e.number, mpq_class(0)));
            case K::ImagUnit: return QRatio(GaussRat::i_unit());
            case K::QSymbol: return QRatio(QScalar::q_pow(1));
            case K::Lambda: return QRatio(lambda());
            case K::LambdaPlus: return QRatio(lambda_plus());
            case K::Kappa: return QRatio(kappa());
            case K::Coord: {
                const Coordinate c = coordinate_of(e.name);
                return CoordPoly::variable(c.sector, opts_.convention, c.var);
            }
            case K::Neg: return scale(eval(e.args[0]), QRatio(-1));
            case K::Add: return add(eval(e.args[0]), eval(e.args[1]));
            case K::Sub: return add(eval(e.args[0]), scale(eval(e.args[1]), QRatio(-1)));
            case K::Mul: return multiply(eval(e.args[0]), eval(e.args[1]));
            case K::Star: {
                Value v = eval(e.args[0]);
                for (size_t k = 1; k < e.args.size(); ++k) v = multiply(v, eval(e.args[k]));
                return v;
            }
            case K::Pow: {
                if (e.integer < 0) throw std::invalid_argument("negative powers are not supported");
                const Value base = eval(e.args[0]);
                Value r = QRatio(1);
                for (int k = 0; k < e.integer; ++k) r = multiply(r, base);
                return r;
            }
            case K::Conj: {
                const Value v = eval(e.args[0]);
                if (auto s = std::get_if<QRatio>(&v)) return s->conj();
                if (auto p = std::get_if<CoordPoly>(&v)) return conjugate(*p);
                return conjugate(std::get<PhaseSpacePoly>(v));
            }
            case K::Translate: return q_translate(position_poly(eval(e.args[0]), Convention::Wt), Translation::Plus);
            case K::TranslateBar:
                return q_translate(position_poly(eval(e.args[0]), Convention::W), Translation::PlusBar);
            case K::Invert: return q_invert(position_poly(eval(e.args[0]), Convention::Wt), Translation::Plus);
            case K::InvertBar: return q_invert(position_poly(eval(e.args[0]), Convention::W), Translation::PlusBar);
            case K::Exp: return build_exponential(parse_variant(e.name), e.integer).body;
            case K::Derive: {
                const Value v = eval(e.args[0]);
                const Convention need = e.label.required_convention();
                if (auto ps = std::get_if<PhaseSpacePoly>(&v)) {
                    if (ps->first().convention != need)
                        throw std::invalid_argument("derivative " + e.label.to_string() + " needs a " +
                                                    convention_name(need) + "-ordered first factor");
                    return apply_derivative_first(e.label, *ps);
                }
                return apply_derivative(e.label, in_convention(as_poly(v, Sector::X), need));
            }
            case K::InverseDerive: {
                const Convention need = e.label.required_convention();
                return inverse_partial(e.label, in_convention(as_poly(eval(e.args[0]), Sector::X), need));
            }
        }
        throw std::logic_error("unreachable");
    }

private:
    CoordPoly as_poly(const Value& v, Sector fallback) const {
        if (auto p = std::get_if<CoordPoly>(&v)) return *p;
        if (auto s = std::get_if<QRatio>(&v)) return CoordPoly::constant(fallback, opts_.convention, *s);
        throw std::invalid_argument("a polynomial is required here, not a phase-space series");
    }

    CoordPoly position_poly(const Value& v, Convention c) const {
        CoordPoly f = as_poly(v, Sector::X);
        if (f.sector() != Sector::X) throw std::invalid_argument("translations act on position polynomials");
        return in_convention(f, c);
    }

    static Value scale(const Value& v, const QRatio& c) {
        if (auto s = std::get_if<QRatio>(&v)) return *s * c;
        if (auto p = std::get_if<CoordPoly>(&v)) return *p * c;
        return std::get<PhaseSpacePoly>(v) * c;
    }

    static CoordPoly unit(Sector s, Convention c) { return CoordPoly::constant(s, c, QRatio(1)); }

    // Lifts a polynomial into the phase-space factor with the same sector.
    static PhaseSpacePoly lift(const CoordPoly& f, const PhaseSpacePoly& like) {
        if (f.sector() == like.first().sector && f.sector() != like.second().sector)
            return PhaseSpacePoly::tensor(in_convention(f, like.first().convention),
                                          unit(like.second().sector, like.second().convention));
        if (f.sector() == like.second().sector && f.sector() != like.first().sector)
            return PhaseSpacePoly::tensor(unit(like.first().sector, like.first().convention),
                                          in_convention(f, like.second().convention));
        throw std::invalid_argument("cannot combine a " + sector_name(f.sector()) +
                                    "-sector polynomial with this phase-space series");
    }

    static PhaseSpacePoly lift_scalar(const QRatio& s, const PhaseSpacePoly& like) {
        return PhaseSpacePoly::tensor(CoordPoly::constant(like.first().sector, like.first().convention, s),
                                      unit(like.second().sector, like.second().convention));
    }

    // Position and momentum factors commute, so mixed products live in x (x) p.
    static PhaseSpacePoly phase_space(const CoordPoly& a, const CoordPoly& b) {
        return a.sector() == Sector::X ? PhaseSpacePoly::tensor(a, b) : PhaseSpacePoly::tensor(b, a);
    }

    Value add(const Value& a, const Value& b) const {
        if (auto sa = std::get_if<QRatio>(&a)) {
            if (auto sb = std::get_if<QRatio>(&b)) return *sa + *sb;
            return add(b, a);
        }
        if (auto pa = std::get_if<CoordPoly>(&a)) {
            if (auto sb = std::get_if<QRatio>(&b))
                return *pa + CoordPoly::constant(pa->sector(), pa->convention(), *sb);
            if (auto pb = std::get_if<CoordPoly>(&b)) {
                if (pa->sector() != pb->sector())
                    return phase_space(*pa, unit(pb->sector(), pb->convention())) +
                           phase_space(unit(pa->sector(), pa->convention()), *pb);
                return *pa + in_convention(*pb, pa->convention());
            }
            const auto& fb = std::get<PhaseSpacePoly>(b);
            return lift(*pa, fb) + fb;
        }
        const auto& fa = std::get<PhaseSpacePoly>(a);
        if (auto sb = std::get_if<QRatio>(&b)) return fa + lift_scalar(*sb, fa);
        if (auto pb = std::get_if<CoordPoly>(&b)) return fa + lift(*pb, fa);
        const auto& fb = std::get<PhaseSpacePoly>(b);
        if (!(fa.first() == fb.first()) || !(fa.second() == fb.second()))
            throw std::invalid_argument("phase-space series with different factors cannot be added");
        return fa + fb;
    }

    Value multiply(const Value& a, const Value& b) const {
        if (auto sa = std::get_if<QRatio>(&a)) return scale(b, *sa);
        if (auto sb = std::get_if<QRatio>(&b)) return scale(a, *sb);
        if (auto pa = std::get_if<CoordPoly>(&a)) {
            if (auto pb = std::get_if<CoordPoly>(&b)) {
                if (pa->sector() != pb->sector()) return phase_space(*pa, *pb);
                return star_product(*pa, in_convention(*pb, pa->convention()));
            }
            const auto& fb = std::get<PhaseSpacePoly>(b);
            return star_product(lift(*pa, fb), fb);
        }
        const auto& fa = std::get<PhaseSpacePoly>(a);
        if (auto pb = std::get_if<CoordPoly>(&b)) return star_product(fa, lift(*pb, fa));
        const auto& fb = std::get<PhaseSpacePoly>(b);
        return star_product(fa, fb);
    }

    EvalOptions opts_;
};

}  // namespace

Expr parse_expression(const std::string& src) { return Parser(src).parse(); }

std::string print_expression(const Expr& e) {
    std::ostringstream os;
    print(e, os);
    return os.str();
}

Json expression_to_json(const Expr& e) {
    Json j = {{"kind", kind_name(e.kind)}};
    switch (e.kind) {
        case Expr::Kind::Number: j["value"] = rational_to_string(e.number); break;
        case Expr::Kind::Coord: j["name"] = e.name; break;
        case Expr::Kind::Pow: j["exponent"] = e.integer; break;
        case Expr::Kind::Exp:
            j["variant"] = e.name;
            j["order"] = e.integer;
            break;
        case Expr::Kind::Derive:
        case Expr::Kind::InverseDerive: j["operator"] = e.label.to_string(); break;
        default: break;
    }
    if (!e.args.empty()) {
        Json args = Json::array();
        for (const Expr& a : e.args) args.push_back(expression_to_json(a));
        j["args"] = args;
    }
    return j;
}

Value evaluate(const Expr& e, const EvalOptions& opts) { return Evaluator(opts).eval(e); }

std::string value_to_string(const Value& v) {
    if (auto s = std::get_if<QRatio>(&v)) return s->to_string();
    if (auto p = std::get_if<CoordPoly>(&v)) return p->to_string();
    return std::get<PhaseSpacePoly>(v).to_string();
}

Json value_to_json(const Value& v) {
    if (auto s = std::get_if<QRatio>(&v)) return {{"type", "scalar"}, {"value", to_json(*s)}};
    if (auto p = std::get_if<CoordPoly>(&v)) return {{"type", "polynomial"}, {"value", to_json(*p)}};
    return {{"type", "phase_space"}, {"value", to_json(std::get<PhaseSpacePoly>(v))}};
}

}  // namespace qe
