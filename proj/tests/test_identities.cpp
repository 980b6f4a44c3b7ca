#include <doctest.h>

#include <rgcalc/errors.hpp>
#include <rgcalc/identities.hpp>

using namespace rgcalc;

namespace
{

void check(const VerifyResult &r)
{
    INFO(r.detail);
    CHECK(r.passed);
}

} // namespace

TEST_CASE("T = exp(R)")
{
    check(verify_T_equals_expR(1));
    check(verify_T_equals_expR(8));
}

TEST_CASE("gen(z,t) functional equation")
{
    check(verify_gen_z(0));
    check(verify_gen_z(5));
}

TEST_CASE("gen(u^-1,t) and gen(v^-1,t) identities")
{
    check(verify_gen_u_and_v(0));
    check(verify_gen_u_and_v(5));
}

TEST_CASE("gen(a,t) under G_Q")
{
    check(verify_gen_a(1));
    check(verify_gen_a(4));
}

TEST_CASE("Zeng's Y(u,t)")
{
    check(verify_zeng_Y(5, {Rational(0), Rational(1, 2), Rational(-1, 3)}));
    check(verify_zeng_Y(3, {Rational(7, 5)}));
    CHECK_THROWS_AS(verify_zeng_Y(3, {Rational(1)}), NonInvertibleLinearFactor);
}

TEST_CASE("expansions in a and x")
{
    check(verify_dr_expansions(2));
    check(verify_dr_expansions(7));
}

TEST_CASE("defining relation of psi")
{
    check(verify_psi_defining(0, 3));
    check(verify_psi_defining(2, 6));
    check(verify_psi_defining(5, 8));
}
