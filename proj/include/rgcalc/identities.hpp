#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <rgcalc/rational.hpp>
#include <rgcalc/trees.hpp>

namespace rgcalc
{

// Outcome of an exact identity check. `detail` names the first mismatch.
struct VerifyResult
{
    bool passed = true;
    std::string detail;

    static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

// exp(R(u,t)) == T(u,t), both solved from their own functional equations.
VerifyResult verify_T_equals_expR(std::size_t order);

// gen(z,t) = z exp((z^-1 - u^-1 z^-1 + u^-1 v t) gen(z,t) + u^-1 - 1) under G_R.
VerifyResult verify_gen_z(std::size_t order);

// (1 - gen(u^-1,t)) e^{gen(u^-1,t)} = e^{u^-1} (1 - u^-1 + u^-1 v z t), and the
// same with gen(u^-1,t) replaced by u^-1 v gen(v^-1,t).
VerifyResult verify_gen_u_and_v(std::size_t order);

// gen(a,t) under G_Q equals a exp(x z^-1 y) with y from the grammar
// equation, and matches a + a x z^-1 sum Q_{n,k}(x z^-1) u^k (vzt)^n / n!.
VerifyResult verify_gen_a(std::size_t order);

// For each sample u0 != 1: (e^{xy} - 1)/x with y from Zeng's equation equals
// sum Q_{n,k}(x) (1-u0)^-k t^n/n!, and equals (gen(a,t) - 1)/x under
// a = v = z = 1, u = 1/(1-u0). Throws NonInvertibleLinearFactor at u0 = 1.
VerifyResult verify_zeng_Y(std::size_t order, const std::vector<Rational> &u_samples);

// y = R(a, a x) satisfies x = y e^-y + (a-1)/a (e^-y - 1); its coefficients
// and those of e^y match the improper-edge counts for n <= min(order,
// tree_bound); e^{xy} expands with Q_{n,k}(x) a^{n+k}.
VerifyResult verify_dr_expansions(std::size_t order, int tree_bound = 7);

// sum_k (x+k)^{r+k} e^{-u(x+k)} u^k / k! = sum_{k=1}^{r+1} psi_k(r,x) / (1-u)^{k+r}
// as formal power series in u up to u^max_u_order.
VerifyResult verify_psi_defining(int r, std::size_t max_u_order);

} // namespace rgcalc
