#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "spincalc/error.hpp"
#include "spincalc/expr.hpp"

using namespace spincalc;

namespace {

Rational eval_rat(const std::string& src) {
    Value v = eval_expr(parse_expr(src));
    return std::get<Rational>(v);
}

std::string eval_str(const std::string& src) {
    return value_str(eval_expr(parse_expr(src)));
}

// the evaluation corpus: every expression must parse, round-trip, and evaluate
const std::vector<std::string>& corpus() {
    static const std::vector<std::string> exprs = {
        "deg(d_irr * d02 * d03)",
        "deg(push(virt()^3))",
        "deg((0 - d02 - d03)^3)",
        "deg(d_irr*d_irr*d02)",
        "deg(d02^3)",
        "deg(d03^3)",
        "deg(d_irr*d02^2)",
        "deg(d_irr*d03^2)",
        "deg(d02^2*d03)",
        "deg(d02*d03^2)",
        "deg(kps^3)",
        "deg(kps*kps*kps)",
        "deg((-d02-d03)^3)",
        "deg(-d02*d02*d02)",
        "1/36",
        "2/4",
        "-5",
        "1/2 + 1/3",
        "2 * 3/4",
        "(1/2)^3",
        "1/2^3",
        "2^3 - 3^2",
        "-(1/2 - 1/3)",
        "st(d_irr)",
        "st(d02)",
        "st(d03)",
        "st(kps)",
        "st(d_irr + d02)",
        "virt()",
        "push(virt())",
        "push(D03*D03)",
        "push(S*S)",
        "push(S*S*S)",
        "push(D02*D03_0)",
        "push(36*D03_0 - D03)",
        "deg(push(S*D02*D03_0)) * 72",
        "deg(push(virt()*virt()*virt()))",
        "deg(push(st(kps)*D03*D03))",
        "deg(push(st(d03) * st(d02)) * d_irr)",
        "deg(push(Dirr0*D02) * d02)",
        "Dirr0 - Dirr1 - Dirr2",
        "S - Dirr0 + Dirr1 + Dirr2",
        "deg(push(S*D03) * (0-d02-d03)) * -2",
        "3/4 * deg(d02*d02*d02) + 1/8",
        "deg((d02 + d03)^2 * d_irr)",
        "deg(d02 * (d02 + 2*d03) * d03)",
        "push(D02^2)",
        "push((D03 + D03_0)^2)",
        "deg(push((S - D02)^2 * st(d02)))",
        "deg(push(virt()^2 * virt()))",
        "deg(push(virt()^2) * push(virt()))",
    };
    return exprs;
}

}  // namespace

TEST_CASE("headline evaluations") {
    CHECK(eval_rat("deg(d_irr * d02 * d03)") == frac(3, 2));
    CHECK(eval_rat("deg(push(virt()^3))") == frac(1, 108));
    CHECK(eval_rat("deg((0-d02-d03)^3)") == frac(1, 6));
    CHECK(eval_rat("deg(d_irr*d_irr*d02)") == Rational(0));
}

TEST_CASE("precedence and associativity") {
    CHECK(eval_rat("1 + 2 * 3") == Rational(7));
    CHECK(eval_rat("2 * 3 ^ 2") == Rational(18));
    CHECK(eval_rat("-2^2") == Rational(-4));  // unary minus binds below the power
    CHECK(eval_rat("1 - 2 - 3") == Rational(-4));
    CHECK(eval_rat("(1 - 2) - 3") == Rational(-4));
    CHECK(eval_rat("1 - (2 - 3)") == Rational(2));
    CHECK(eval_rat("1/2^3") == frac(1, 8));  // fraction literal binds first
    CHECK(eval_rat("6/4") == frac(3, 2));
}

TEST_CASE("fraction literals versus class division") {
    CHECK_THROWS_AS(parse_expr("d02 / 2"), ParseError);
    CHECK_THROWS_AS(parse_expr("1 / d02"), ParseError);
    CHECK_THROWS_AS(parse_expr("deg(d02^3) / 2"), ParseError);
    CHECK(eval_rat(" 3 / 4 ") == frac(3, 4));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_expr("deg(d_irr *");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 12);
    }
    try {
        parse_expr("deg(unknown_thing)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
        CHECK(e.col == 5);
    }
    CHECK_THROWS_AS(parse_expr("deg(d02, d03)"), ParseError);   // arity
    CHECK_THROWS_AS(parse_expr("virt(d02)"), ParseError);       // arity
    CHECK_THROWS_AS(parse_expr("mystery(d02)"), ParseError);    // unknown call
    CHECK_THROWS_AS(parse_expr("d02 @ d03"), ParseError);       // lexical
    CHECK_THROWS_AS(parse_expr("d02 ^ d03"), ParseError);       // exponent shape
    CHECK_THROWS_AS(parse_expr("d02 ^ 4"), ParseError);         // exponent bound
    CHECK_THROWS_AS(parse_expr("d02 ^ -1"), ParseError);        // exponent sign
    CHECK_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("type errors are computation errors") {
    CHECK_THROWS_AS(eval_expr(parse_expr("d02 + D02")), CalcError);
    CHECK_THROWS_AS(eval_expr(parse_expr("d02 * D02")), CalcError);
    CHECK_THROWS_AS(eval_expr(parse_expr("1 + d02")), CalcError);
    CHECK_THROWS_AS(eval_expr(parse_expr("st(D02)")), CalcError);
    CHECK_THROWS_AS(eval_expr(parse_expr("st(d02*d03)")), CalcError);
    CHECK_THROWS_AS(eval_expr(parse_expr("push(d02)")), CalcError);
    CHECK_THROWS_AS(eval_expr(parse_expr("deg(D02^3)")), CalcError);
    CHECK_THROWS_AS(eval_expr(parse_expr("deg(1/2)")), CalcError);
    CHECK_THROWS_AS(eval_expr(parse_expr("push(Dirr0*Dirr1*D02)")), CalcError);
}

TEST_CASE("pullback and pushforward through the language") {
    CHECK(eval_str("st(d03)") == "3*D03");
    CHECK(eval_str("st(d_irr)") == "Dirr0 + 6*Dirr1");
    CHECK(eval_str("st(kps)") == "-D02 - 3*D03");
    CHECK(eval_rat("deg(push(st(d03) * st(d02)) * d_irr)") == frac(9, 2));
    // the pullback relation: st(kps) and the named generator push the same way
    CHECK(eval_rat("deg(push(st(kps)*D03*D03))") == frac(1, 72));
    // mixed products of distinct non-separating pieces have no stratum data
    CHECK_THROWS_WITH_AS(eval_expr(parse_expr("deg(push(st(d_irr)^2))")),
                         doctest::Contains("unsupported stratum"), CalcError);
}

TEST_CASE("corpus round-trips and evaluates") {
    for (const std::string& src : corpus()) {
        INFO("expression: ", src);
        ExprPtr ast = parse_expr(src);
        std::string printed = expr_str(ast);
        ExprPtr again = parse_expr(printed);
        CHECK(expr_equal(ast, again));
        CHECK(expr_str(again) == printed);  // printing is a fixed point
        CHECK_NOTHROW(eval_expr(ast));
    }
    CHECK(corpus().size() >= 50);
}

TEST_CASE("random token soup never escapes the typed errors") {
    const std::vector<std::string> pieces = {
        "d02", "d03", "d_irr", "kps", "S", "D03_0", "virt",  "st",  "push", "deg",
        "(",   ")",   "+",     "-",   "*", "^",     "/",     "1",   "2",    "36",
        ",",   " ",   "0",     "x",   "(", ")"};
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<size_t> pick(0, pieces.size() - 1);
    std::uniform_int_distribution<int> len(1, 12);
    for (int trial = 0; trial < 300; ++trial) {
        std::string src;
        int n = len(rng);
        for (int i = 0; i < n; ++i) src += pieces[pick(rng)];
        try {
            eval_expr(parse_expr(src));
        } catch (const ParseError&) {
        } catch (const CalcError&) {
        }
    }
}

TEST_CASE("values print exactly") {
    CHECK(eval_str("deg(d_irr*d_irr*d02)") == "0");
    CHECK(eval_str("deg(d_irr*d02*d03)") == "3/2");
    CHECK(eval_str("1/36 * 6") == "1/6");
    CHECK(eval_str("push(D03*D03)") == "1/3*d03*d03");
}
