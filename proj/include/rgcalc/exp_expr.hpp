#pragma once

#include <map>
#include <set>
#include <string>

#include <rgcalc/laurent_poly.hpp>

namespace rgcalc
{

// Finite sum  sum_i coeff_i * exp(arg_i)  with Laurent polynomial coefficients
// and arguments. Canonical form: arguments are pairwise distinct and no
// coefficient is zero; arg = 0 holds the purely polynomial part. exp of a
// numeric constant is kept symbolic.
class ExpExpr
{
public:
    // Keyed by the exponential argument.
    using term_map = std::map<LaurentPoly, LaurentPoly>;

    ExpExpr() = default;
    ExpExpr(long c);
    ExpExpr(const Rational &c);
    ExpExpr(const LaurentPoly &p);
    ExpExpr(const LaurentPoly &coeff, const LaurentPoly &arg);

    // exp(arg) with coefficient 1.
    static ExpExpr exp(const LaurentPoly &arg);

    const term_map &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // True when there is no exponential factor other than exp(0).
    bool is_polynomial() const;

    // The polynomial part; throws Error if exponential terms are present.
    LaurentPoly as_polynomial() const;

    // Single term whose coefficient is a unit Laurent polynomial.
    bool is_unit() const;
    ExpExpr inverse() const;

    std::set<Symbol> variables() const;

    ExpExpr &operator+=(const ExpExpr &other);
    ExpExpr &operator-=(const ExpExpr &other);
    ExpExpr &operator*=(const Rational &c);

    friend ExpExpr operator+(ExpExpr a, const ExpExpr &b) { return a += b; }
    friend ExpExpr operator-(ExpExpr a, const ExpExpr &b) { return a -= b; }
    friend ExpExpr operator*(const ExpExpr &a, const ExpExpr &b);
    friend ExpExpr operator*(ExpExpr a, const Rational &c) { return a *= c; }
    friend ExpExpr operator*(const Rational &c, ExpExpr a) { return a *= c; }
    friend ExpExpr operator-(ExpExpr a);

    friend bool operator==(const ExpExpr &a, const ExpExpr &b) { return a.terms_ == b.terms_; }

    void add_term(const LaurentPoly &coeff, const LaurentPoly &arg);

    // "coeff*exp(arg) + ..." with the polynomial part first.
    std::string to_string() const;

    // Same, but each coefficient has its monomial content pulled out.
    std::string to_factored_string() const;

private:
    term_map terms_;
};

ExpExpr pow(const ExpExpr &e, int k);

// Substitution on both coefficients and exponential arguments. A ring
// homomorphism; NonUnitInverse when a negative power meets a non-unit image.
ExpExpr substitute(const ExpExpr &e, const Bindings &bindings);

// Canonical-form equality.
inline bool ee_equal(const ExpExpr &a, const ExpExpr &b)
{
    return a == b;
}

} // namespace rgcalc
