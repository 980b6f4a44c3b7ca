#include <doctest.h>

#include <rgcalc/errors.hpp>
#include <rgcalc/grammar.hpp>
#include <rgcalc/parser.hpp>
#include <rgcalc/series_equations.hpp>
#include <rgcalc/trees.hpp>

using namespace rgcalc;

namespace
{

LaurentPoly lp(const char *s)
{
    return parse_expression(s).as_polynomial();
}

LaurentPoly histogram_poly(const Histogram &h, const char *var)
{
    LaurentPoly p;
    const LaurentPoly x = LaurentPoly::variable(var);
    for (std::size_t k = 0; k < h.size(); ++k) {
        p += pow(x, static_cast<int>(k)) * Rational(static_cast<long>(h[k]));
    }
    return p;
}

} // namespace

TEST_CASE("series arithmetic")
{
    using S = PolySeries;
    const S t = S::t(4);
    const S one = S::constant(4, LaurentPoly(1));
    const S geo = one + t + t * t + t * t * t + t * t * t * t;
    CHECK((one - t) * geo == one);
    CHECK((t * t).order() == 4);
    CHECK((t + S::t(2)).order() == 2);
    CHECK(t.scaled_variable(LaurentPoly(2))[1] == LaurentPoly(2));
    CHECK(t.shifted(2)[3] == LaurentPoly(1));
}

TEST_CASE("series_exp and series_log")
{
    using S = PolySeries;
    CHECK(series_exp(S(5)) == S::constant(5, LaurentPoly(1)));
    const S t = S::t(6);
    const S e = series_exp(t);
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(e[n] == LaurentPoly(inverse_factorial(n)));
    }
    const S s = t * lp("u + v") + t * t * lp("u^-1") - t * t * t * LaurentPoly(Rational(3, 7));
    CHECK(series_log(series_exp(s)) == s);
    CHECK_THROWS_AS(series_exp(S::constant(3, lp("u"))), BadConstantTerm);
    CHECK_THROWS_AS(series_log(S::constant(3, LaurentPoly(2))), BadConstantTerm);

    // with a symbolic constant term
    const TruncatedSeries<ExpExpr> c = to_exp_series(S::constant(2, lp("u^-1")) + S::t(2));
    const auto ec = series_exp(c);
    CHECK(ec[0] == ExpExpr::exp(lp("u^-1")));
    CHECK(ec[2] == ExpExpr::exp(lp("u^-1")) * Rational(1, 2));
}

TEST_CASE("gen(e^{u^-1}) equals e^{gen(u^-1)}")
{
    const Grammar g = preset("G_R");
    const auto gu = gen_series(g, parse_expression("u^-1"), 5);
    const auto ge = gen_series(g, parse_expression("exp(u^-1)"), 5);
    auto shifted = gu;
    shifted[0] = ExpExpr{};
    CHECK(series_exp(shifted) * ExpExpr::exp(lp("u^-1")) == ge);
    CHECK(series_exp(gu) == ge);
}

TEST_CASE("R-eq")
{
    const SeriesEquation eq{EquationKind::r_eq, {}};
    CHECK(linear_factor(eq) == lp("-u^-1"));
    const PolySeries r = solve_equation(eq, 7);
    CHECK(r[0].is_zero());
    const auto egf = egf_coefficients(r);
    CHECK(egf[5] == lp("24 + 96*u + 190*u^2 + 210*u^3 + 105*u^4"));
    for (int n = 1; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(egf[static_cast<std::size_t>(n)] == histogram_poly(count_R(n), "u"));
    }
    CHECK(residual(eq, r).is_zero());
}

TEST_CASE("T-eq")
{
    const SeriesEquation eq{EquationKind::t_eq, {}};
    CHECK(linear_factor(eq) == lp("-u^-1"));
    CHECK(solve_equation(eq, 0).coefficients() == std::vector<LaurentPoly>{LaurentPoly(1)});
    const PolySeries t = solve_equation(eq, 6);
    CHECK(residual(eq, t).is_zero());
    const auto egf = egf_coefficients(t);
    CHECK(egf[4] == lp("24 + 46*u + 40*u^2 + 15*u^3"));
    for (int n = 1; n <= 6; ++n) {
        CHECK(egf[static_cast<std::size_t>(n)] == histogram_poly(count_T(n), "u"));
    }
    CHECK(series_exp(solve_equation({EquationKind::r_eq, {}}, 6)) == t);
}

TEST_CASE("solutions are unique")
{
    for (EquationKind k : {EquationKind::r_eq, EquationKind::t_eq, EquationKind::y_grammar_eq}) {
        const SeriesEquation eq{k, {}};
        const PolySeries y = solve_equation(eq, 5);
        for (std::size_t n = 1; n <= 5; ++n) {
            PolySeries p = y;
            p[n] += LaurentPoly(1);
            const PolySeries res = residual(eq, p);
            for (std::size_t m = 0; m < n; ++m) {
                CHECK(res[m].is_zero());
            }
            CHECK_FALSE(res[n].is_zero());
        }
    }
}

TEST_CASE("Y-grammar-eq")
{
    const SeriesEquation eq{EquationKind::y_grammar_eq, {}};
    CHECK(linear_factor(eq) == LaurentPoly(1));
    const PolySeries y = solve_equation(eq, 5);
    CHECK(residual(eq, y).is_zero());
    CHECK(y[1] == lp("v*z"));
    const SeriesEquation flat{EquationKind::y_grammar_eq, {{"v", LaurentPoly(1)}, {"z", LaurentPoly(1)}}};
    const PolySeries y1 = solve_equation(flat, 4);
    CHECK(y1[1] == LaurentPoly(1));
    CHECK(residual(flat, y1).is_zero());
}

TEST_CASE("Y-zeng-eq")
{
    const SeriesEquation at_half{EquationKind::y_zeng_eq, {{"u", LaurentPoly(Rational(1, 2))}}};
    CHECK(linear_factor(at_half) == LaurentPoly(Rational(1, 2)));
    CHECK(residual(at_half, solve_equation(at_half, 5)).is_zero());

    // u = 0 gives t = y e^-y: the tree function sum n^(n-1) t^n / n!
    const SeriesEquation at_zero{EquationKind::y_zeng_eq, {{"u", LaurentPoly(0)}}};
    const PolySeries y = solve_equation(at_zero, 7);
    for (unsigned n = 1; n <= 7; ++n) {
        Integer p = 1;
        for (unsigned i = 1; i < n; ++i) {
            p *= n;
        }
        CHECK(y[n] == LaurentPoly(Rational(p) * inverse_factorial(n)));
    }

    const SeriesEquation at_one{EquationKind::y_zeng_eq, {{"u", LaurentPoly(1)}}};
    CHECK_THROWS_AS(solve_equation(at_one, 3), NonInvertibleLinearFactor);
    CHECK(linear_factor({EquationKind::y_zeng_eq, {}}) == lp("1 - u"));
    CHECK_THROWS_AS(solve_equation({EquationKind::y_zeng_eq, {}}, 2), NonInvertibleLinearFactor);
}

TEST_CASE("equation names")
{
    CHECK(equation_name(EquationKind::r_eq) == "R-eq");
    CHECK(parse_equation_name("Y-zeng-eq") == EquationKind::y_zeng_eq);
    CHECK_FALSE(parse_equation_name("S-eq").has_value());
}

TEST_CASE("Ramanujan's equation in x")
{
    // y = R(a, a x) solves x = y e^-y + (a-1)/a (e^-y - 1); the series
    // variable now stands for x.
    const PolySeries r = solve_equation({EquationKind::r_eq, {{"u", lp("a")}}}, 6);
    const PolySeries y = r.scaled_variable(lp("a"));
    CHECK(ramanujan_residual(y).is_zero());
    PolySeries bad = y;
    bad[2] += LaurentPoly(1);
    CHECK_FALSE(ramanujan_residual(bad).is_zero());
}
