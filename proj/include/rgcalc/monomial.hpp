#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace rgcalc
{

// Variable name. The alphabet is fixed per computation: grammars declare it
// and the expression parser rejects names outside of it.
using Symbol = std::string;

// Product of variables raised to nonzero integer powers, stored as
// (symbol, exponent) pairs sorted by symbol. Zero exponents are never stored,
// so the empty monomial is 1.
class Monomial
{
public:
    using value_type = std::pair<Symbol, int>;

    Monomial() = default;

    static Monomial variable(const Symbol &name, int exponent = 1);

    // Builds a monomial from arbitrary (symbol, exponent) pairs; duplicates
    // are merged and zero exponents dropped.
    static Monomial from_pairs(std::vector<value_type> pairs);

    const std::vector<value_type> &exponents() const noexcept { return exps_; }
    int exponent(const Symbol &name) const;
    long degree() const noexcept;
    bool is_one() const noexcept { return exps_.empty(); }

    Monomial inverse() const;
    Monomial pow(int k) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);

    friend bool operator==(const Monomial &, const Monomial &) = default;

    // Graded-lexicographic order: total degree first, then the exponent of
    // the alphabetically first variable where the two differ.
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b);

    // Exponent-wise minimum (absent exponents count as 0).
    friend Monomial gcd(const Monomial &a, const Monomial &b);

    // "u^-1*v^2", or "1" for the empty monomial.
    std::string to_string() const;

private:
    std::vector<value_type> exps_;
};

} // namespace rgcalc
