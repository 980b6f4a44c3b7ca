#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <rgcalc/laurent_poly.hpp>
#include <rgcalc/series.hpp>

namespace rgcalc
{

using PolySeries = TruncatedSeries<LaurentPoly>;

enum class EquationKind
{
    // R = (1 - u^-1 + u^-1 t) e^R + u^-1 - 1,                R(0) = 0
    r_eq,
    // T = exp((1 - u^-1 + u^-1 t) T + u^-1 - 1),             T(0) = 1
    t_eq,
    // (1 - u^-1 + y) u e^-y = u - 1 + v z t,                 y(0) = 0
    y_grammar_eq,
    // (1 - u) t = y e^-y + u (e^-y - 1),                      y(0) = 0
    y_zeng_eq,
};

struct SeriesEquation
{
    EquationKind kind;
    // Applied to the equation's parameters (u, v, z) before solving.
    Bindings substitutions;
};

std::string equation_name(EquationKind kind);
std::optional<EquationKind> parse_equation_name(std::string_view name);

// F(y) for the equation written as F(y) = 0, truncated at y's order.
PolySeries residual(const SeriesEquation &eq, const PolySeries &y);

// The unique solution with the forced constant term. Each order n is linear
// in the unknown y_n with a constant factor lambda (u^-1 up to sign for
// R-eq/T-eq, 1 for the grammar equation, 1 - u for Zeng's); the factor must
// be a unit after substitution, otherwise NonInvertibleLinearFactor.
PolySeries solve_equation(const SeriesEquation &eq, std::size_t order);

// lambda = [t^1] (F(y0 + t) - F(y0)).
LaurentPoly linear_factor(const SeriesEquation &eq);

// Residual of  x = y e^-y + (a-1)/a (e^-y - 1)  in the variable x.
PolySeries ramanujan_residual(const PolySeries &y);

} // namespace rgcalc
