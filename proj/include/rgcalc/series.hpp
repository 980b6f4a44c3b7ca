#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <rgcalc/errors.hpp>
#include <rgcalc/exp_expr.hpp>
#include <rgcalc/laurent_poly.hpp>
#include <rgcalc/rational.hpp>

namespace rgcalc
{

// How series_exp handles a nonzero constant term for a coefficient ring.
template <typename R>
struct ExpConstant;

template <>
struct ExpConstant<LaurentPoly> {
    static LaurentPoly exp(const LaurentPoly &c0)
    {
        if (!c0.is_zero()) {
            throw BadConstantTerm("exp of a series with constant term " + c0.to_string()
                                  + " has no Laurent polynomial coefficients");
        }
        return LaurentPoly(1);
    }
};

template <>
struct ExpConstant<ExpExpr> {
    static ExpExpr exp(const ExpExpr &c0)
    {
        if (c0.is_zero()) {
            return ExpExpr(1);
        }
        if (!c0.is_polynomial()) {
            throw BadConstantTerm("exp of a series with constant term " + c0.to_string()
                                  + " would nest exponentials");
        }
        return ExpExpr::exp(c0.as_polynomial());
    }
};

// Power series  sum_{n <= order} c_n t^n  truncated at a fixed order.
// Coefficients are plain (no factorials folded in). Binary operations
// truncate at the smaller of the two orders.
template <typename R>
class TruncatedSeries
{
public:
    explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    TruncatedSeries(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1);
    }

    static TruncatedSeries constant(std::size_t order, const R &c)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    // The series t (zero if order is 0).
    static TruncatedSeries t(std::size_t order)
    {
        TruncatedSeries s(order);
        if (order >= 1) {
            s.coeffs_[1] = R(1);
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<R> &coefficients() const noexcept { return coeffs_; }
    const R &operator[](std::size_t n) const { return coeffs_.at(n); }
    R &operator[](std::size_t n) { return coeffs_.at(n); }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const R &c) { return c == R{}; });
    }

    TruncatedSeries truncated(std::size_t order) const
    {
        return TruncatedSeries(std::min(order, this->order()),
                               std::vector<R>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1));
    }

    // Coefficientwise map, e.g. a substitution in the coefficient ring.
    template <typename F>
    auto map(F &&f) const
    {
        using Out = std::decay_t<decltype(f(coeffs_[0]))>;
        std::vector<Out> out;
        out.reserve(coeffs_.size());
        for (const auto &c : coeffs_) {
            out.push_back(f(c));
        }
        return TruncatedSeries<Out>(order(), std::move(out));
    }

    // t -> a*t, i.e. c_n -> c_n * a^n.
    TruncatedSeries scaled_variable(const R &a) const
    {
        TruncatedSeries s(*this);
        R power(1);
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            power = power * a;
            s.coeffs_[n] = s.coeffs_[n] * power;
        }
        return s;
    }

    // Multiplication by t^k, dropping what falls beyond the order.
    TruncatedSeries shifted(std::size_t k) const
    {
        TruncatedSeries s(order());
        for (std::size_t n = k; n < coeffs_.size(); ++n) {
            s.coeffs_[n] = coeffs_[n - k];
        }
        return s;
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] += o.coeffs_[n];
        }
        return *this;
    }

    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] -= o.coeffs_[n];
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }

    friend TruncatedSeries operator-(const TruncatedSeries &a)
    {
        return a.map([](const R &c) { return -c; });
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const std::size_t order = std::min(a.order(), b.order());
        TruncatedSeries r(order);
        for (std::size_t i = 0; i <= order; ++i) {
            if (a.coeffs_[i] == R{}) {
                continue;
            }
            for (std::size_t j = 0; i + j <= order; ++j) {
                if (b.coeffs_[j] == R{}) {
                    continue;
                }
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const R &c)
    {
        return a.map([&](const R &x) { return x * c; });
    }

    friend TruncatedSeries operator*(const R &c, const TruncatedSeries &a) { return a * c; }

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    std::vector<std::string> to_strings() const
    {
        std::vector<std::string> out;
        for (const auto &c : coeffs_) {
            out.push_back(c.to_string());
        }
        return out;
    }

private:
    std::vector<R> coeffs_;
};

// exp(s). The constant term is split off: exp(s) = exp(c0) * exp(s - c0),
// where exp(c0) must exist in the coefficient ring (BadConstantTerm
// otherwise). The remainder uses n*E_n = sum_k k*S_k*E_{n-k}.
template <typename R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R> &s)
{
    const std::size_t order = s.order();
    TruncatedSeries<R> e(order);
    e[0] = R(1);
    for (std::size_t n = 1; n <= order; ++n) {
        R acc{};
        for (std::size_t k = 1; k <= n; ++k) {
            if (s[k] == R{} || e[n - k] == R{}) {
                continue;
            }
            acc += s[k] * e[n - k] * Rational(static_cast<long>(k));
        }
        e[n] = acc * Rational(1, static_cast<long>(n));
    }
    if (s[0] == R{}) {
        return e;
    }
    return e * ExpConstant<R>::exp(s[0]);
}

// log(s) for c0 = 1; BadConstantTerm otherwise.
template <typename R>
TruncatedSeries<R> series_log(const TruncatedSeries<R> &s)
{
    if (!(s[0] == R(1))) {
        throw BadConstantTerm("log requires constant term 1, got " + s[0].to_string());
    }
    const std::size_t order = s.order();
    TruncatedSeries<R> l(order);
    for (std::size_t n = 1; n <= order; ++n) {
        R acc{};
        for (std::size_t k = 1; k < n; ++k) {
            if (l[k] == R{} || s[n - k] == R{}) {
                continue;
            }
            acc += l[k] * s[n - k] * Rational(static_cast<long>(k));
        }
        l[n] = s[n] - acc * Rational(1, static_cast<long>(n));
    }
    return l;
}

// sum_n c_n t^n  ->  the exponential-generating-function coefficients n! c_n.
template <typename R>
std::vector<R> egf_coefficients(const TruncatedSeries<R> &s)
{
    std::vector<R> out;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        out.push_back(s[n] * Rational(factorial(static_cast<unsigned>(n))));
    }
    return out;
}

// Inverse of egf_coefficients.
template <typename R>
TruncatedSeries<R> from_egf(const std::vector<R> &egf)
{
    TruncatedSeries<R> s(egf.size() - 1);
    for (std::size_t n = 0; n < egf.size(); ++n) {
        s[n] = egf[n] * inverse_factorial(static_cast<unsigned>(n));
    }
    return s;
}

inline TruncatedSeries<ExpExpr> to_exp_series(const TruncatedSeries<LaurentPoly> &s)
{
    return s.map([](const LaurentPoly &p) { return ExpExpr(p); });
}

} // namespace rgcalc
