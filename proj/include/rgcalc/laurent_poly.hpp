#pragma once

#include <map>
#include <set>
#include <string>

#include <rgcalc/monomial.hpp>
#include <rgcalc/rational.hpp>

namespace rgcalc
{

class LaurentPoly;

using Bindings = std::map<Symbol, LaurentPoly>;

// Finite sum of monomials with exact rational coefficients. Terms are kept in
// ascending graded-lex order and zero coefficients are never stored.
class LaurentPoly
{
public:
    using term_map = std::map<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const Rational &c);
    LaurentPoly(const Monomial &m, const Rational &c = 1);

    static LaurentPoly variable(const Symbol &name, int exponent = 1);

    const term_map &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // A unit is a single nonzero term; only units are invertible.
    bool is_unit() const noexcept { return terms_.size() == 1; }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial &m) const;

    std::set<Symbol> variables() const;

    LaurentPoly inverse() const;

    LaurentPoly &operator+=(const LaurentPoly &other);
    LaurentPoly &operator-=(const LaurentPoly &other);
    LaurentPoly &operator*=(const LaurentPoly &other);
    LaurentPoly &operator*=(const Rational &c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational &c) { return a *= c; }
    friend LaurentPoly operator*(const Rational &c, LaurentPoly a) { return a *= c; }
    friend LaurentPoly operator-(LaurentPoly a);

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.terms_ == b.terms_; }

    // Arbitrary but total order (lexicographic over the term sequences).
    // Used to key exponential arguments.
    friend bool operator<(const LaurentPoly &a, const LaurentPoly &b);

    // Adds c*m in place.
    void add_term(const Monomial &m, const Rational &c);

    // Multiplies every monomial by m.
    LaurentPoly shifted(const Monomial &m) const;

    // Common monomial factor of all terms (exponent-wise minimum).
    Monomial monomial_content() const;

    // "2 + 4*u + 3*u^2"; "0" for the zero polynomial.
    std::string to_string() const;

    // Pulls the monomial content out: "v^3*z^3*(2 + 4*u + 3*u^2)".
    std::string to_factored_string() const;

private:
    // c must already be in lowest terms.
    void add_canonical(const Monomial &m, const Rational &c);

    term_map terms_;
};

// Exact power. Negative k requires a unit; otherwise NonUnitInverse.
LaurentPoly pow(const LaurentPoly &p, int k);

// Replaces each bound variable by its image and re-canonicalizes. A variable
// occurring with a negative exponent must be bound to a unit.
LaurentPoly substitute(const LaurentPoly &p, const Bindings &bindings);

} // namespace rgcalc
