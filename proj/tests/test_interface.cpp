#include "doctest.h"
#include "qeuclid/dsl.hpp"
#include "qeuclid/generators.hpp"
#include "qeuclid/suites.hpp"
#include "support.hpp"

using namespace qe;
using namespace qe::test;

TEST_CASE("parsing star products and derivative actions") {
    const Expr e = parse_expression("star(x-, x+)");
    CHECK(e.kind == Expr::Kind::Star);
    REQUIRE(e.args.size() == 2);
    CHECK(e.args[0].kind == Expr::Kind::Coord);
    CHECK(e.args[0].name == "x-");
    CHECK(e.args[1].name == "x+");

    const Expr d = parse_expression("d[+] |> star(x+, x+)");
    CHECK(d.kind == Expr::Kind::Derive);
    CHECK(d.label.index == Index::Plus);
    CHECK(d.label.side == ActionSide::Left);
    REQUIRE(d.args.size() == 1);
    CHECK(d.args[0].kind == Expr::Kind::Star);
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_expression("star(x-,");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.offset() == 8);
        CHECK(err.line() == 1);
        CHECK(err.column() == 9);
    }
    try {
        parse_expression("x+ +\n  y3");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.line() == 2);
        CHECK(err.column() == 3);
    }
    CHECK_THROWS_AS(parse_expression("x+^"), ParseError);
    CHECK_THROWS_AS(parse_expression("exp[nope](2)"), ParseError);
}

TEST_CASE("printing is a right inverse of parsing") {
    for (const char* src : {"star(x-, x+)", "d[+] |> star(x+, x+)", "-(x3 + 2/3*q)^2 * lambda_plus",
                            "conj(i*x+) - kappa", "dhat[^-] |>bar x- <| d[3]", "exp[starpx](2)",
                            "translate(x3 * x+)", "dinv[-](x3^2)", "x+ <|bar d[^3] <|bar d[0]"}) {
        const Expr e = parse_expression(src);
        CHECK(parse_expression(print_expression(e)) == e);
        CHECK(print_expression(parse_expression(print_expression(e))) == print_expression(e));
    }
}

TEST_CASE("evaluating expressions") {
    const Value v = evaluate(parse_expression("x- * x+"));
    REQUIRE(std::holds_alternative<CoordPoly>(v));
    CHECK(std::get<CoordPoly>(v) == x(kXPlus) * x(kXMinus) + x(kX3) * x(kX3) * QRatio(lambda()));
    const Value d = evaluate(parse_expression("d[-] |> x3^2"));
    CHECK(std::get<CoordPoly>(d) == x(kXPlus) * QRatio(lambda() * (QScalar(1) + q(2))));
    const Value s = evaluate(parse_expression("lambda * lambda_plus + 1"));
    REQUIRE(std::holds_alternative<QRatio>(s));
    CHECK(std::get<QRatio>(s) == QRatio(q(2) - q(-2) + QScalar(1)));
    CHECK_THROWS_AS(evaluate(parse_expression("translate(p3)")), std::invalid_argument);
}

TEST_CASE("JSON round trips are byte-identical") {
    Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        const Sector s = rng.coin() ? Sector::X : Sector::P;
        const CoordPoly f = random_poly(rng, s, rng.coin() ? Convention::W : Convention::Wt, 4, 4, s == Sector::X);
        const std::string text = to_json(f).dump();
        const CoordPoly back = coordpoly_from_json(Json::parse(text));
        CHECK(back == f);
        CHECK(to_json(back).dump() == text);

        const NCPoly g = random_ncpoly(rng, s, 5, 4, s == Sector::X);
        const std::string gtext = to_json(g).dump();
        CHECK(to_json(ncpoly_from_json(Json::parse(gtext))).dump() == gtext);
    }
    const PhaseSpacePoly e = build_exponential(ExpVariant::StarXP, 3).body;
    CHECK(to_json(phasepoly_from_json(Json::parse(to_json(e).dump()))).dump() == to_json(e).dump());
    CHECK_THROWS_AS(coordpoly_from_json(Json::parse(R"({"sector":"z"})")), std::invalid_argument);
}

TEST_CASE("suite runs") {
    SuiteConfig config;
    const SuiteReport star = run_suite("starcalc", config);
    CHECK(star.failure_count() == 0);
    CHECK(star.case_count() > 0);
    CHECK(star.heine.is_null());

    SuiteConfig small = config;
    small.cases = 3;
    const SuiteReport first = run_suite("qexp", small);
    const SuiteReport second = run_suite("qexp", small);
    CHECK(first.to_json().dump() == second.to_json().dump());

    SuiteConfig schr = config;
    schr.N = 3;
    schr.K = 3;
    schr.cases = 2;
    schr.only_check.reset();
    const SuiteReport with_heine = run_suite("schrodinger", schr);
    CHECK(with_heine.failure_count() == 0);
    CHECK(with_heine.to_json().contains("heine_diagnostic"));

    SuiteConfig classical = config;
    classical.q_text = "1";
    classical.q0 = 1.0;
    classical.cases = 5;
    const SuiteReport all = run_suite("all", classical);
    CHECK(all.failure_count() == 0);
    int skipped = 0;
    for (const CheckResult& c : all.checks) skipped += c.skipped ? 1 : 0;
    CHECK(skipped > 0);

    SuiteConfig bad = config;
    bad.only_check = "no_such_check";
    CHECK_THROWS_AS(run_suite("qarith", bad), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("nothing", config), std::invalid_argument);
    CHECK(parse_q("11/10") == doctest::Approx(1.1));
    CHECK_THROWS(parse_q("1.1x"));
}
