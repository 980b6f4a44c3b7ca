#pragma once

#include <string>
#include <vector>

#include <rgcalc/laurent_poly.hpp>
#include <rgcalc/rational.hpp>

namespace rgcalc
{

// Dense univariate polynomial in x with rational coefficients, ascending
// degree. No trailing zeros; the zero polynomial has degree -1.
class UniPoly
{
public:
    static constexpr int zero_degree = -1;

    UniPoly() = default;
    UniPoly(long c);
    UniPoly(const Rational &c);
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly x();

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational> &coefficients() const noexcept { return coeffs_; }
    Rational coefficient(int i) const;

    // p(x + c), expanded with binomial coefficients.
    UniPoly shifted(const Rational &c) const;

    Rational evaluate(const Rational &at) const;

    // p evaluated at a Laurent polynomial (Horner).
    LaurentPoly evaluate(const LaurentPoly &at) const;

    LaurentPoly to_laurent(const Symbol &var = "x") const;

    UniPoly &operator+=(const UniPoly &o);
    UniPoly &operator-=(const UniPoly &o);

    friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator*(const Rational &c, const UniPoly &a);

    friend bool operator==(const UniPoly &, const UniPoly &) = default;

    // Compact form used in printed tables: "x^3-6x^2+11x-6".
    std::string to_string() const;

    // Expression syntax accepted by parse_expression: "x^3 - 6*x^2 + 11*x - 6".
    std::string to_expr_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

} // namespace rgcalc
