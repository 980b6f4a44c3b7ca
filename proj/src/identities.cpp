#include <rgcalc/identities.hpp>

#include <rgcalc/errors.hpp>
#include <rgcalc/grammar.hpp>
#include <rgcalc/parser.hpp>
#include <rgcalc/ramanujan.hpp>
#include <rgcalc/series_equations.hpp>

namespace rgcalc
{

namespace
{

using ExpSeries = TruncatedSeries<ExpExpr>;

LaurentPoly poly(std::string_view text)
{
    return parse_expression(text).as_polynomial();
}

ExpExpr expr(std::string_view text)
{
    return parse_expression(text);
}

template <typename R>
VerifyResult compare(const TruncatedSeries<R> &lhs, const TruncatedSeries<R> &rhs, const std::string &what)
{
    const std::size_t order = std::min(lhs.order(), rhs.order());
    for (std::size_t n = 0; n <= order; ++n) {
        if (!(lhs[n] == rhs[n])) {
            return VerifyResult::fail(what + ": first mismatch at order " + std::to_string(n) + ": "
                                      + lhs[n].to_string() + " vs " + rhs[n].to_string());
        }
    }
    return {};
}

PolySeries to_poly_series(const ExpSeries &s)
{
    return s.map([](const ExpExpr &e) { return e.as_polynomial(); });
}

} // namespace

VerifyResult verify_T_equals_expR(std::size_t order)
{
    const PolySeries r = solve_equation({EquationKind::r_eq, {}}, order);
    const PolySeries t = solve_equation({EquationKind::t_eq, {}}, order);
    return compare(series_exp(r), t, "exp(R) = T");
}

VerifyResult verify_gen_z(std::size_t order)
{
    const Grammar g = preset("G_R");
    const ExpSeries gen_z = gen_series(g, expr("z"), order);
    ExpSeries lin = ExpSeries::constant(order, expr("z^-1 - u^-1*z^-1"));
    if (order >= 1) {
        lin[1] = expr("u^-1*v");
    }
    const ExpSeries arg = lin * gen_z + ExpSeries::constant(order, expr("u^-1 - 1"));
    return compare(gen_z, series_exp(arg) * expr("z"), "gen(z,t) functional equation");
}

VerifyResult verify_gen_u_and_v(std::size_t order)
{
    const Grammar g = preset("G_R");
    ExpSeries rhs = ExpSeries::constant(order, expr("exp(u^-1)*(1 - u^-1)"));
    if (order >= 1) {
        rhs[1] = expr("exp(u^-1)*u^-1*v*z");
    }
    const ExpSeries one = ExpSeries::constant(order, ExpExpr(1));

    const ExpSeries gen_u_inv = gen_series(g, expr("u^-1"), order);
    if (auto r = compare((one - gen_u_inv) * series_exp(gen_u_inv), rhs, "gen(u^-1,t) equation"); !r.passed) {
        return r;
    }
    const ExpSeries s = gen_series(g, expr("v^-1"), order) * expr("u^-1*v");
    return compare((one - s) * series_exp(s), rhs, "gen(v^-1,t) equation");
}

VerifyResult verify_gen_a(std::size_t order)
{
    const Grammar g = preset("G_Q");
    const PolySeries gen_a = to_poly_series(gen_series(g, expr("a"), order));
    const PolySeries y = solve_equation({EquationKind::y_grammar_eq, {}}, order);
    const PolySeries closed = series_exp(y * poly("x*z^-1")) * poly("a");
    if (auto r = compare(gen_a, closed, "gen(a,t) = a exp(x z^-1 y)"); !r.passed) {
        return r;
    }

    const QTable q = q_via_shor(std::max<int>(1, static_cast<int>(order)));
    const LaurentPoly x_over_z = poly("x*z^-1");
    const LaurentPoly u = poly("u");
    PolySeries expansion = PolySeries::constant(order, poly("a"));
    for (std::size_t n = 1; n <= order; ++n) {
        LaurentPoly inner;
        for (int k = 0; k < static_cast<int>(n); ++k) {
            inner += q.at(static_cast<int>(n), k).evaluate(x_over_z) * pow(u, k);
        }
        expansion[n] = inner * poly("a*x*z^-1") * pow(poly("v*z"), static_cast<int>(n))
                       * inverse_factorial(static_cast<unsigned>(n));
    }
    return compare(gen_a, expansion, "gen(a,t) Q-expansion");
}

VerifyResult verify_zeng_Y(std::size_t order, const std::vector<Rational> &u_samples)
{
    const QTable q = q_via_shor(std::max<int>(1, static_cast<int>(order)));
    const Grammar g = preset("G_Q");
    const ExpSeries gen_a = gen_series(g, expr("a"), order);
    const LaurentPoly x = poly("x");
    const LaurentPoly x_inv = poly("x^-1");
    for (const Rational &u0 : u_samples) {
        const std::string tag = "u = " + u0.get_str();
        const PolySeries y = solve_equation({EquationKind::y_zeng_eq, {{"u", LaurentPoly(u0)}}}, order);
        const PolySeries one = PolySeries::constant(order, LaurentPoly(1));
        const PolySeries zeng = (series_exp(y * x) - one) * x_inv;

        const Rational w = 1 / (1 - u0);
        PolySeries from_q(order);
        for (std::size_t n = 1; n <= order; ++n) {
            LaurentPoly c;
            Rational w_pow(1);
            for (int k = 0; k < static_cast<int>(n); ++k) {
                c += q.at(static_cast<int>(n), k).to_laurent("x") * w_pow;
                w_pow *= w;
            }
            from_q[n] = c * inverse_factorial(static_cast<unsigned>(n));
        }
        if (auto r = compare(zeng, from_q, "Y(u,t) vs Q table at " + tag); !r.passed) {
            return r;
        }

        const Bindings spec{{"a", LaurentPoly(1)}, {"v", LaurentPoly(1)}, {"z", LaurentPoly(1)}, {"u", LaurentPoly(w)}};
        const PolySeries gen_spec = gen_a.map([&](const ExpExpr &e) { return substitute(e, spec).as_polynomial(); });
        if (auto r = compare(zeng, (gen_spec - one) * x_inv, "Y(u,t) vs gen(a,t) at " + tag); !r.passed) {
            return r;
        }
    }
    return {};
}

VerifyResult verify_dr_expansions(std::size_t order, int tree_bound)
{
    // y(x) = R(a, a x): rename u to a, then scale t -> a t.
    const PolySeries r = solve_equation({EquationKind::r_eq, {}}, order);
    const LaurentPoly a = poly("a");
    const PolySeries y = r.map([&](const LaurentPoly &c) { return substitute(c, {{"u", a}}); }).scaled_variable(a);
    if (auto res = ramanujan_residual(y); !res.is_zero()) {
        return VerifyResult::fail("y = R(a, a x) does not solve Ramanujan's equation");
    }

    const PolySeries ey = series_exp(y);
    const auto y_egf = egf_coefficients(y);
    const auto ey_egf = egf_coefficients(ey);
    const std::size_t tree_max = std::min<std::size_t>(order, static_cast<std::size_t>(std::max(tree_bound, 0)));
    for (std::size_t n = 1; n <= tree_max; ++n) {
        const int nn = static_cast<int>(n);
        const Histogram rh = count_R(nn, tree_bound);
        const Histogram th = count_T(nn, tree_bound);
        LaurentPoly want_y;
        LaurentPoly want_ey;
        for (int k = 0; k < nn; ++k) {
            const LaurentPoly ank = pow(a, nn + k);
            want_y += ank * Rational(static_cast<long>(rh[static_cast<std::size_t>(k)]));
            want_ey += ank * Rational(static_cast<long>(th[static_cast<std::size_t>(k)]));
        }
        if (!(y_egf[n] == want_y)) {
            return VerifyResult::fail("y expansion at n = " + std::to_string(n) + ": " + y_egf[n].to_string()
                                      + " vs trees " + want_y.to_string());
        }
        if (!(ey_egf[n] == want_ey)) {
            return VerifyResult::fail("e^y expansion at n = " + std::to_string(n) + ": " + ey_egf[n].to_string()
                                      + " vs trees " + want_ey.to_string());
        }
    }

    // e^{x y} with x now the polynomial variable (kept apart from the series
    // variable): 1 + x sum_n (sum_k Q_{n,k}(x) a^{n+k}) X^n / n!.
    const QTable q = q_via_shor(std::max<int>(1, static_cast<int>(order)));
    const PolySeries exy = series_exp(y * poly("x"));
    PolySeries want = PolySeries::constant(order, LaurentPoly(1));
    for (std::size_t n = 1; n <= order; ++n) {
        const int nn = static_cast<int>(n);
        LaurentPoly c;
        for (int k = 0; k < nn; ++k) {
            c += q.at(nn, k).to_laurent("x") * pow(a, nn + k);
        }
        want[n] = c * poly("x") * inverse_factorial(static_cast<unsigned>(n));
    }
    return compare(exy, want, "e^{xy} Q-expansion");
}

VerifyResult verify_psi_defining(int r, std::size_t max_u_order)
{
    const std::size_t m = max_u_order;
    const PsiTable psi = psi_via_ramanujan(r);
    const UniPoly x = UniPoly::x();

    // Left side: the k-sum stops at k = m since each summand carries u^k.
    TruncatedSeries<LaurentPoly> lhs(m);
    for (std::size_t k = 0; k <= m; ++k) {
        const UniPoly x_plus_k = x + UniPoly(static_cast<long>(k));
        UniPoly base(1);
        for (int i = 0; i < r + static_cast<int>(k); ++i) {
            base = base * x_plus_k;
        }
        // e^{-u(x+k)} = sum_j (-(x+k))^j u^j / j!
        TruncatedSeries<LaurentPoly> e(m);
        UniPoly power(1);
        for (std::size_t j = 0; j <= m; ++j) {
            e[j] = power.to_laurent("x") * inverse_factorial(static_cast<unsigned>(j));
            power = power * (Rational(-1) * x_plus_k);
        }
        const LaurentPoly scale = base.to_laurent("x") * inverse_factorial(static_cast<unsigned>(k));
        lhs += (e * scale).shifted(k);
    }

    // Right side: (1-u)^{-s} = sum_j C(s+j-1, j) u^j.
    TruncatedSeries<LaurentPoly> rhs(m);
    for (int k = 1; k <= r + 1; ++k) {
        const long s = k + r;
        const LaurentPoly p = psi.at(r, k).to_laurent("x");
        for (std::size_t j = 0; j <= m; ++j) {
            rhs[j] += p * Rational(binomial(s + static_cast<long>(j) - 1, static_cast<long>(j)));
        }
    }
    return compare(lhs, rhs, "psi defining expansion at r = " + std::to_string(r));
}

} // namespace rgcalc
