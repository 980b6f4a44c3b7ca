#include <rgcalc/uni_poly.hpp>

namespace rgcalc
{

UniPoly::UniPoly(long c) : UniPoly(Rational(c)) {}

UniPoly::UniPoly(const Rational &c) : UniPoly(std::vector<Rational>{c}) {}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

UniPoly UniPoly::x()
{
    return UniPoly(std::vector<Rational>{0, 1});
}

void UniPoly::trim()
{
    for (auto &c : coeffs_) {
        c.canonicalize();
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational UniPoly::coefficient(int i) const
{
    return (i < 0 || i > degree()) ? Rational(0) : coeffs_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::shifted(const Rational &shift) const
{
    Rational c = shift;
    c.canonicalize();
    // sum_i a_i (x + c)^i = sum_j x^j sum_{i >= j} a_i C(i, j) c^(i - j)
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Rational cpow(1);
        for (std::size_t d = 0; d <= i; ++d) {
            const std::size_t j = i - d;
            out[j] += coeffs_[i] * Rational(binomial(static_cast<long>(i), static_cast<long>(d))) * cpow;
            cpow *= c;
        }
    }
    return UniPoly(std::move(out));
}

Rational UniPoly::evaluate(const Rational &point) const
{
    Rational at = point;
    at.canonicalize();
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

LaurentPoly UniPoly::evaluate(const LaurentPoly &at) const
{
    LaurentPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + LaurentPoly(*it);
    }
    return acc;
}

LaurentPoly UniPoly::to_laurent(const Symbol &var) const
{
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p.add_term(Monomial::variable(var, static_cast<int>(i)), coeffs_[i]);
    }
    return p;
}

UniPoly &UniPoly::operator+=(const UniPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly &UniPoly::operator-=(const UniPoly &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

UniPoly operator*(const UniPoly &a, const UniPoly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(const Rational &c, const UniPoly &a)
{
    Rational s = c;
    s.canonicalize();
    std::vector<Rational> out(a.coeffs_);
    for (auto &x : out) {
        x *= s;
    }
    return UniPoly(std::move(out));
}

namespace
{

std::string render(const std::vector<Rational> &coeffs, bool compact)
{
    if (coeffs.empty()) {
        return "0";
    }
    std::string s;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        const Rational &c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        if (s.empty()) {
            s += negative ? "-" : "";
        } else if (compact) {
            s += negative ? "-" : "+";
        } else {
            s += negative ? " - " : " + ";
        }
        const Rational a = abs(c);
        std::string power = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
        if (i == 0) {
            s += a.get_str();
        } else if (a == 1) {
            s += power;
        } else {
            s += a.get_str() + (compact ? "" : "*") + power;
        }
    }
    return s;
}

} // namespace

std::string UniPoly::to_string() const
{
    return render(coeffs_, true);
}

std::string UniPoly::to_expr_string() const
{
    return render(coeffs_, false);
}

} // namespace rgcalc
