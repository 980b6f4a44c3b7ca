#include <rgcalc/exp_expr.hpp>

#include <rgcalc/errors.hpp>

namespace rgcalc
{

ExpExpr::ExpExpr(long c) : ExpExpr(LaurentPoly(c)) {}

ExpExpr::ExpExpr(const Rational &c) : ExpExpr(LaurentPoly(c)) {}

ExpExpr::ExpExpr(const LaurentPoly &p)
{
    add_term(p, LaurentPoly{});
}

ExpExpr::ExpExpr(const LaurentPoly &coeff, const LaurentPoly &arg)
{
    add_term(coeff, arg);
}

ExpExpr ExpExpr::exp(const LaurentPoly &arg)
{
    return ExpExpr(LaurentPoly(1), arg);
}

bool ExpExpr::is_polynomial() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

LaurentPoly ExpExpr::as_polynomial() const
{
    if (!is_polynomial()) {
        throw Error("expression " + to_string() + " is not a Laurent polynomial");
    }
    return terms_.empty() ? LaurentPoly{} : terms_.begin()->second;
}

bool ExpExpr::is_unit() const
{
    return terms_.size() == 1 && terms_.begin()->second.is_unit();
}

ExpExpr ExpExpr::inverse() const
{
    if (!is_unit()) {
        throw NonUnitInverse("cannot invert " + to_string() + ": not a single unit term");
    }
    const auto &[arg, coeff] = *terms_.begin();
    return ExpExpr(coeff.inverse(), -arg);
}

std::set<Symbol> ExpExpr::variables() const
{
    std::set<Symbol> out;
    for (const auto &[arg, coeff] : terms_) {
        out.merge(arg.variables());
        out.merge(coeff.variables());
    }
    return out;
}

void ExpExpr::add_term(const LaurentPoly &coeff, const LaurentPoly &arg)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(arg, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

ExpExpr &ExpExpr::operator+=(const ExpExpr &other)
{
    for (const auto &[arg, coeff] : other.terms_) {
        add_term(coeff, arg);
    }
    return *this;
}

ExpExpr &ExpExpr::operator-=(const ExpExpr &other)
{
    for (const auto &[arg, coeff] : other.terms_) {
        add_term(-coeff, arg);
    }
    return *this;
}

ExpExpr &ExpExpr::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &entry : terms_) {
        entry.second *= c;
    }
    return *this;
}

ExpExpr operator*(const ExpExpr &a, const ExpExpr &b)
{
    ExpExpr r;
    for (const auto &[arg_a, coeff_a] : a.terms_) {
        for (const auto &[arg_b, coeff_b] : b.terms_) {
            r.add_term(coeff_a * coeff_b, arg_a + arg_b);
        }
    }
    return r;
}

ExpExpr operator-(ExpExpr a)
{
    for (auto &entry : a.terms_) {
        entry.second = -entry.second;
    }
    return a;
}

ExpExpr pow(const ExpExpr &e, int k)
{
    if (k < 0) {
        return pow(e.inverse(), -k);
    }
    ExpExpr result(1);
    ExpExpr base = e;
    while (k > 0) {
        if (k & 1) {
            result = result * base;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

ExpExpr substitute(const ExpExpr &e, const Bindings &bindings)
{
    if (bindings.empty()) {
        return e;
    }
    ExpExpr r;
    for (const auto &[arg, coeff] : e.terms()) {
        r.add_term(substitute(coeff, bindings), substitute(arg, bindings));
    }
    return r;
}

namespace
{

std::string render(const ExpExpr::term_map &terms, bool factored)
{
    if (terms.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &[arg, coeff] : terms) {
        auto poly_str = [&](const LaurentPoly &p) { return factored ? p.to_factored_string() : p.to_string(); };
        std::string body;
        bool negative = false;
        if (arg.is_zero()) {
            body = poly_str(coeff);
            if (coeff.size() == 1 && body.front() == '-') {
                negative = true;
                body.erase(0, 1);
            }
        } else {
            const std::string e = "exp(" + arg.to_string() + ")";
            if (coeff.size() == 1) {
                const auto &[m, c] = *coeff.terms().begin();
                negative = c < 0;
                const LaurentPoly abs_coeff(m, abs(c));
                body = abs_coeff == LaurentPoly(1) ? e : abs_coeff.to_string() + "*" + e;
            } else {
                body = "(" + poly_str(coeff) + ")*" + e;
            }
        }
        if (first) {
            s += negative ? "-" : "";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        s += body;
    }
    return s;
}

} // namespace

std::string ExpExpr::to_string() const
{
    return render(terms_, false);
}

std::string ExpExpr::to_factored_string() const
{
    return render(terms_, true);
}

} // namespace rgcalc
