#include <doctest.h>

#include <rgcalc/errors.hpp>
#include <rgcalc/grammar.hpp>
#include <rgcalc/parser.hpp>

using namespace rgcalc;

namespace
{

ExpExpr ee(const char *s)
{
    return parse_expression(s);
}

} // namespace

TEST_CASE("derive: first derivatives under G_R")
{
    const Grammar g = preset("G_R");
    CHECK(derive(g, ee("v*z")) == ee("v^2*z^2*(1 + u)"));
    CHECK(derive(g, ee("u^-1*v")).is_zero());
    CHECK(derive(g, ee("z*exp(u^-1)")).is_zero());
    CHECK(derive(g, ee("z")) == ee("v*z^2"));
    // negative powers: D(m^-1) = -m^-2 D(m)
    CHECK(derive(g, ee("z^-1")) == ee("-v"));
    CHECK(derive(g, ee("u^-1")) == ee("-v*z"));
    CHECK(derive(g, ee("v^-2")) == ee("-2*u*v^-1*z"));
    // chain rule through exp
    CHECK(derive(g, ee("exp(z)")) == ee("v*z^2*exp(z)"));
    CHECK(derive(g, ExpExpr(5)).is_zero());
}

TEST_CASE("derive rejects variables outside the alphabet")
{
    const Grammar g = preset("G_R");
    CHECK_THROWS_AS(derive(g, ee("a*z")), UnknownVariable);
    CHECK_THROWS_AS(derive(g, ee("exp(x)")), UnknownVariable);
    CHECK_THROWS_AS(derive_n(g, ee("q"), 0), UnknownVariable);
    CHECK_THROWS_AS(parse_in(g, "x"), UnknownVariable);
}

TEST_CASE("derive_n: the listed expansions of D^n(vz) and D^n(z)")
{
    const Grammar g = preset("G_R");
    const char *vz[] = {"v*z", "v^2*z^2*(1 + u)", "v^3*z^3*(2 + 4*u + 3*u^2)",
                        "v^4*z^4*(6 + 18*u + 25*u^2 + 15*u^3)",
                        "v^5*z^5*(24 + 96*u + 190*u^2 + 210*u^3 + 105*u^4)"};
    const char *z[] = {"z", "v*z^2", "v^2*z^3*(2 + u)", "v^3*z^4*(6 + 7*u + 3*u^2)",
                       "v^4*z^5*(24 + 46*u + 40*u^2 + 15*u^3)"};
    for (std::size_t n = 0; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(derive_n(g, ee("v*z"), n) == ee(vz[n]));
        CHECK(derive_n(g, ee("z"), n) == ee(z[n]));
    }
    const auto chain = derivative_chain(g, ee("v*z"), 4);
    REQUIRE(chain.size() == 5);
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(chain[n] == ee(vz[n]));
    }
}

TEST_CASE("Dumont-Ramamonjisoa grammar expansions")
{
    // Taken literally D^(n-1)(AS) carries the factor A^n S^n, which the
    // displayed identity suppresses.
    const Grammar g = preset("DR");
    const char *r[] = {"1", "1 + A", "2 + 4*A + 3*A^2"};
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        const ExpExpr d = derive_n(g, ee("A*S"), static_cast<std::size_t>(n - 1));
        CHECK(d == pow(ee("A*S"), n) * ee(r[n - 1]));
    }
    CHECK(derive_n(g, ee("S"), 2) == ee("A^2*S^3*(2 + A)"));
    CHECK(derive_n(g, ee("S"), 3) == ee("A^3*S^4*(6 + 7*A + 3*A^2)"));
}

TEST_CASE("is_constant")
{
    const Grammar g = preset("G_R");
    CHECK(is_constant(g, ee("z*exp(u^-1)"), 1));
    CHECK(derive(g, ee("(u - 1)*v^-1*z^-1")) == ExpExpr(1));
    CHECK_FALSE(is_constant(g, ee("(u - 1)*v^-1*z^-1"), 1));
    CHECK(is_constant(g, ee("(u - 1)*v^-1*z^-1"), 2));
    CHECK_FALSE(is_constant(g, ee("z"), 1));
    CHECK_THROWS_AS(is_constant(g, ee("z"), 0), std::invalid_argument);
}

TEST_CASE("is_eigenfunction")
{
    const Grammar g = preset("G_R");
    const auto c = is_eigenfunction(g, ee("u^-1*v"));
    REQUIRE(c.has_value());
    CHECK(c->is_zero());
    // D(z) = (vz) z but vz is not a constant
    CHECK_FALSE(is_eigenfunction(g, ee("z")).has_value());
    // multi-term expressions are outside the detectable class
    CHECK_FALSE(is_eigenfunction(g, ee("z + v")).has_value());

    const auto h = is_eigenfunction(preset("H"), ee("b*c^-1"));
    REQUIRE(h.has_value());
    CHECK(h->is_zero());

    // a genuine nonzero eigenvalue: D(x) = x under x -> x
    const Grammar lin = parse_grammar("x -> x; k -> 0");
    const auto e = is_eigenfunction(lin, ee("k*x^3*exp(2*x^0*k)"));
    REQUIRE(e.has_value());
    CHECK(*e == ExpExpr(3));

    CHECK_THROWS_AS(is_eigenfunction(g, ExpExpr{}), std::invalid_argument);
}

TEST_CASE("gen_series")
{
    const Grammar g = preset("G_R");
    const auto s = gen_series(g, ee("u^-1*v"), 5);
    CHECK(s.order() == 5);
    CHECK(s[0] == ee("u^-1*v"));
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(s[n].is_zero());
    }

    const auto w = gen_series(g, ee("z^-1 - u^-1*z^-1"), 3);
    CHECK(w[0] == ee("z^-1 - u^-1*z^-1"));
    CHECK(w[1] == ee("u^-1*v"));
    CHECK(w[2].is_zero());
    CHECK(w[3].is_zero());

    const auto z0 = gen_series(g, ee("z"), 0);
    CHECK(z0.order() == 0);
    CHECK(z0[0] == ee("z"));

    // coefficients are D^n / n!
    const auto vz = gen_series(g, ee("v*z"), 4);
    CHECK(vz[4] * Rational(24) == derive_n(g, ee("v*z"), 4));
}

TEST_CASE("constants of G_R")
{
    const Grammar g = preset("G_R");
    CHECK(derive(g, ee("u^-1*v")).is_zero());
    CHECK(derive(g, ee("z*exp(u^-1)")).is_zero());
    CHECK(derive(g, ee("(u - 1)*v^-1*z^-1")) == ExpExpr(1));
    CHECK(derive(g, ee("z^-1 - u^-1*z^-1")) == ee("u^-1*v"));
    CHECK(derive(g, ee("exp(u^-1)*(u*v^-1 - v^-1)")) == ee("z*exp(u^-1)"));
    // the two factorizations used to derive the last two
    CHECK(ee("z^-1 - u^-1*z^-1") == ee("u^-1*v") * ee("(u - 1)*v^-1*z^-1"));
    CHECK(ee("exp(u^-1)*(u*v^-1 - v^-1)") == ee("z*exp(u^-1)") * ee("(u - 1)*v^-1*z^-1"));
}

TEST_CASE("constants of H")
{
    const Grammar h = preset("H");
    CHECK(derive(h, ee("u*c^-1*exp(-u^-1)")).is_zero());
    CHECK(derive(h, ee("b*c^-1")).is_zero());
    CHECK(derive(h, ee("a*exp(b*c^-1*u^-1)")).is_zero());
    CHECK(derive(h, ee("(u - 1)*c^-1")) == ExpExpr(1));
}

TEST_CASE("constants of G_Q")
{
    const Grammar g = preset("G_Q");
    CHECK(derive(g, ee("v*u^-1")).is_zero());
    CHECK(derive(g, ee("z*x^-1")).is_zero());
    CHECK(derive(g, ee("x^-1 - x^-1*u^-1")) == ee("v*z*x^-1*u^-1"));
    CHECK(derive(g, ee("a")) == ee("a*x*v"));
    CHECK(derive(g, ee("x*v")) == ee("x*v^2*z*(1 + u)"));
    CHECK(derive(g, ee("v*z")) == ee("v^2*z^2*(1 + u)"));
}

TEST_CASE("verify_h_consistency")
{
    CHECK(verify_h_consistency(0));
    CHECK(verify_h_consistency(1));
    CHECK(verify_h_consistency(5));
}

TEST_CASE("D^(n-2)(av) identity at small n")
{
    const Grammar g = preset("G_Q");
    const ExpExpr a = ee("a");
    const ExpExpr av = ee("a*v");
    const ExpExpr c1 = ee("x^-1 - x^-1*u^-1");
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        const ExpExpr lhs = derive_n(g, av, static_cast<std::size_t>(n - 2));
        const ExpExpr rhs = c1 * derive_n(g, a, static_cast<std::size_t>(n - 1))
                            + ee("v*u^-1") * (ExpExpr(1) + ee("z*x^-1") * ExpExpr(n - 2))
                                  * derive_n(g, a, static_cast<std::size_t>(n - 2));
        CHECK(lhs == rhs);
    }
}
