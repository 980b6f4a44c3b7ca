#include <rgcalc/series_equations.hpp>

#include <rgcalc/errors.hpp>

namespace rgcalc
{

namespace
{

LaurentPoly var(const char *name, int e = 1)
{
    return LaurentPoly::variable(name, e);
}

LaurentPoly param(const SeriesEquation &eq, const LaurentPoly &p)
{
    return substitute(p, eq.substitutions);
}

PolySeries constant(std::size_t order, const LaurentPoly &c)
{
    return PolySeries::constant(order, c);
}

// a + b t
PolySeries affine(std::size_t order, const LaurentPoly &a, const LaurentPoly &b)
{
    PolySeries s = constant(order, a);
    if (order >= 1) {
        s[1] = b;
    }
    return s;
}

LaurentPoly forced_constant(EquationKind kind)
{
    return kind == EquationKind::t_eq ? LaurentPoly(1) : LaurentPoly{};
}

} // namespace

std::string equation_name(EquationKind kind)
{
    switch (kind) {
        case EquationKind::r_eq:
            return "R-eq";
        case EquationKind::t_eq:
            return "T-eq";
        case EquationKind::y_grammar_eq:
            return "Y-grammar-eq";
        case EquationKind::y_zeng_eq:
            return "Y-zeng-eq";
    }
    return {};
}

std::optional<EquationKind> parse_equation_name(std::string_view name)
{
    for (auto k : {EquationKind::r_eq, EquationKind::t_eq, EquationKind::y_grammar_eq, EquationKind::y_zeng_eq}) {
        if (name == equation_name(k)) {
            return k;
        }
    }
    return std::nullopt;
}

PolySeries residual(const SeriesEquation &eq, const PolySeries &y)
{
    const std::size_t order = y.order();
    const LaurentPoly u = param(eq, var("u"));
    switch (eq.kind) {
        case EquationKind::r_eq:
        case EquationKind::t_eq: {
            const LaurentPoly u_inv = param(eq, var("u", -1));
            const PolySeries lin = affine(order, LaurentPoly(1) - u_inv, u_inv);
            const PolySeries shift = constant(order, u_inv - LaurentPoly(1));
            if (eq.kind == EquationKind::r_eq) {
                return lin * series_exp(y) + shift - y;
            }
            return series_exp(lin * y + shift) - y;
        }
        case EquationKind::y_grammar_eq: {
            const LaurentPoly vz = param(eq, var("v") * var("z"));
            const PolySeries lhs = (constant(order, u - LaurentPoly(1)) + y * u) * series_exp(-y);
            return lhs - affine(order, u - LaurentPoly(1), vz);
        }
        case EquationKind::y_zeng_eq: {
            const PolySeries e = series_exp(-y);
            return y * e + (e - constant(order, LaurentPoly(1))) * u - affine(order, LaurentPoly{}, LaurentPoly(1) - u);
        }
    }
    throw std::invalid_argument("unknown equation");
}

LaurentPoly linear_factor(const SeriesEquation &eq)
{
    const PolySeries y0 = PolySeries::constant(1, forced_constant(eq.kind));
    return residual(eq, y0 + PolySeries::t(1))[1] - residual(eq, y0)[1];
}

PolySeries solve_equation(const SeriesEquation &eq, std::size_t order)
{
    PolySeries y = PolySeries::constant(order, forced_constant(eq.kind));
    if (const auto r0 = residual(eq, y.truncated(0))[0]; !r0.is_zero()) {
        throw Error(equation_name(eq.kind) + ": forced constant term leaves residual " + r0.to_string());
    }
    if (order == 0) {
        return y;
    }
    const LaurentPoly lambda = linear_factor(eq);
    if (!lambda.is_unit()) {
        throw NonInvertibleLinearFactor(equation_name(eq.kind) + ": linear factor " + lambda.to_string()
                                        + " is not invertible");
    }
    const LaurentPoly lambda_inv = lambda.inverse();
    for (std::size_t n = 1; n <= order; ++n) {
        // With y_n = 0, the order-n residual is everything but lambda * y_n.
        const LaurentPoly rest = residual(eq, y.truncated(n))[n];
        y[n] = -(rest * lambda_inv);
    }
    return y;
}

PolySeries ramanujan_residual(const PolySeries &y)
{
    const std::size_t order = y.order();
    const PolySeries e = series_exp(-y);
    const LaurentPoly c = LaurentPoly(1) - var("a", -1);
    return y * e + (e - PolySeries::constant(order, LaurentPoly(1))) * c - PolySeries::t(order);
}

} // namespace rgcalc
