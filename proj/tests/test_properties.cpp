#include <doctest.h>

#include <rgcalc/grammar.hpp>
#include <rgcalc/parser.hpp>
#include <rgcalc/series.hpp>

#include "random_exprs.hpp"

using namespace rgcalc;
using rgcalc::testing::Gen;

namespace
{

constexpr int cases = 1000;

} // namespace

TEST_CASE("Laurent polynomials form a commutative ring")
{
    Gen g(1);
    for (int i = 0; i < cases; ++i) {
        const LaurentPoly a = g.poly(), b = g.poly(), c = g.poly();
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        CAPTURE(c.to_string());
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly());
        CHECK(a * LaurentPoly(1) == a);
        CHECK(a + LaurentPoly() == a);
    }
}

TEST_CASE("exponential expressions form a commutative ring")
{
    Gen g(2);
    for (int i = 0; i < cases; ++i) {
        const ExpExpr a = g.expr(), b = g.expr(), c = g.expr();
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == ExpExpr());
    }
}

TEST_CASE("rendering round-trips through the parser")
{
    Gen g(3);
    for (int i = 0; i < cases; ++i) {
        const LaurentPoly p = g.poly();
        CAPTURE(p.to_string());
        CHECK(parse_expression(p.to_string()).as_polynomial() == p);
        CHECK(parse_expression(p.to_factored_string()).as_polynomial() == p);
        const ExpExpr e = g.expr();
        CAPTURE(e.to_string());
        CHECK(parse_expression(e.to_string()) == e);
        CHECK(parse_expression(e.to_factored_string()) == e);
    }
}

TEST_CASE("unit powers invert")
{
    Gen g(4);
    for (int i = 0; i < cases; ++i) {
        const LaurentPoly m = g.unit();
        const int k = g.range(-4, 4);
        CAPTURE(m.to_string());
        CAPTURE(k);
        CHECK(pow(m, k) * pow(m, -k) == LaurentPoly(1));
        CHECK(pow(m, k) == pow(m.inverse(), -k));
        CHECK(m * m.inverse() == LaurentPoly(1));
    }
}

TEST_CASE("substitution is a ring homomorphism")
{
    Gen g(5);
    for (int i = 0; i < cases; ++i) {
        // unit images allow negative exponents
        const Bindings units{{"u", g.unit()}, {"v", g.unit()}};
        const LaurentPoly a = g.poly(), b = g.poly();
        CHECK(substitute(a * b, units) == substitute(a, units) * substitute(b, units));
        CHECK(substitute(a + b, units) == substitute(a, units) + substitute(b, units));
        // arbitrary images on polynomials without negative exponents
        const Bindings any{{"u", g.poly({"v", "z"}, 2, 0, 2)}, {"z", g.poly({"u", "v"}, 2, 0, 2)}};
        const LaurentPoly p = g.poly({"u", "v", "z"}, 3, 0, 2), q = g.poly({"u", "v", "z"}, 3, 0, 2);
        CHECK(substitute(p * q, any) == substitute(p, any) * substitute(q, any));
    }
}

TEST_CASE("D obeys the Leibniz rule to order 5")
{
    Gen g(6);
    const Grammar gr = preset("G_R");
    for (int i = 0; i < cases / 5; ++i) {
        const ExpExpr f = g.expr(), h = g.expr();
        CAPTURE(f.to_string());
        CAPTURE(h.to_string());
        const auto df = derivative_chain(gr, f, 5);
        const auto dh = derivative_chain(gr, h, 5);
        const auto dfh = derivative_chain(gr, f * h, 5);
        for (long n = 0; n <= 5; ++n) {
            ExpExpr sum;
            for (long k = 0; k <= n; ++k) {
                sum += df[static_cast<std::size_t>(k)] * dh[static_cast<std::size_t>(n - k)] * Rational(binomial(n, k));
            }
            CHECK(dfh[static_cast<std::size_t>(n)] == sum);
        }
    }
    for (int i = 0; i < cases; ++i) {
        const ExpExpr f = g.expr(), h = g.expr();
        CHECK(derive(gr, f * h) == derive(gr, f) * h + f * derive(gr, h));
        CHECK(derive(gr, f + h) == derive(gr, f) + derive(gr, h));
    }
}

TEST_CASE("gen is multiplicative")
{
    Gen g(7);
    const Grammar gr = preset("G_R");
    for (int i = 0; i < cases / 5; ++i) {
        const ExpExpr f = g.expr(), h = g.expr();
        CAPTURE(f.to_string());
        CAPTURE(h.to_string());
        CHECK(gen_series(gr, f * h, 4) == gen_series(gr, f, 4) * gen_series(gr, h, 4));
    }
}

TEST_CASE("series exp and log are inverse")
{
    Gen g(8);
    for (int i = 0; i < cases / 5; ++i) {
        const auto s = g.series(6);
        CHECK(series_log(series_exp(s)) == s);
        const auto s2 = g.series(6);
        CHECK(series_exp(s + s2) == series_exp(s) * series_exp(s2));
    }
}

TEST_CASE("gen of a unit times gen of its inverse is 1")
{
    Gen g(9);
    const Grammar gr = preset("G_R");
    const auto one = TruncatedSeries<ExpExpr>::constant(4, ExpExpr(1));
    for (int i = 0; i < cases / 5; ++i) {
        const ExpExpr f(g.unit());
        CAPTURE(f.to_string());
        CHECK(gen_series(gr, f, 4) * gen_series(gr, f.inverse(), 4) == one);
    }
}
