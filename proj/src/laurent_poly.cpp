#include <rgcalc/laurent_poly.hpp>

#include <algorithm>

#include <rgcalc/errors.hpp>

namespace rgcalc
{

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly::LaurentPoly(const Rational &c) : LaurentPoly(Monomial{}, c) {}

LaurentPoly::LaurentPoly(const Monomial &m, const Rational &c)
{
    if (c != 0) {
        terms_.emplace(m, c).first->second.canonicalize();
    }
}

LaurentPoly LaurentPoly::variable(const Symbol &name, int exponent)
{
    return LaurentPoly(Monomial::variable(name, exponent));
}

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational LaurentPoly::constant_term() const
{
    return coefficient(Monomial{});
}

Rational LaurentPoly::coefficient(const Monomial &m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Symbol> LaurentPoly::variables() const
{
    std::set<Symbol> out;
    for (const auto &[m, c] : terms_) {
        for (const auto &p : m.exponents()) {
            out.insert(p.first);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::inverse() const
{
    if (!is_unit()) {
        throw NonUnitInverse("cannot invert " + to_string() + ": not a single-term Laurent polynomial");
    }
    const auto &[m, c] = *terms_.begin();
    return LaurentPoly(m.inverse(), 1 / c);
}

void LaurentPoly::add_term(const Monomial &m, const Rational &c)
{
    Rational v = c;
    v.canonicalize();
    add_canonical(m, v);
}

void LaurentPoly::add_canonical(const Monomial &m, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other)
{
    for (const auto &[m, c] : other.terms_) {
        add_canonical(m, c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other)
{
    for (const auto &[m, c] : other.terms_) {
        add_canonical(m, -c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &other)
{
    *this = *this * other;
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    Rational v = c;
    v.canonicalize();
    for (auto &entry : terms_) {
        entry.second *= v;
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    LaurentPoly r;
    Rational prod;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            r.add_canonical(ma * mb, prod);
        }
    }
    return r;
}

LaurentPoly operator-(LaurentPoly a)
{
    for (auto &entry : a.terms_) {
        entry.second = -entry.second;
    }
    return a;
}

bool operator<(const LaurentPoly &a, const LaurentPoly &b)
{
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [](const auto &x, const auto &y) {
                                            if (x.first != y.first) {
                                                return x.first < y.first;
                                            }
                                            return x.second < y.second;
                                        });
}

LaurentPoly LaurentPoly::shifted(const Monomial &m) const
{
    LaurentPoly r;
    for (const auto &[mm, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), mm * m, c);
    }
    return r;
}

Monomial LaurentPoly::monomial_content() const
{
    if (terms_.empty()) {
        return {};
    }
    Monomial g = terms_.begin()->first;
    for (const auto &[m, c] : terms_) {
        g = gcd(g, m);
    }
    return g;
}

namespace
{

// One term without its sign.
std::string term_body(const Monomial &m, const Rational &abs_c)
{
    if (m.is_one()) {
        return abs_c.get_str();
    }
    if (abs_c == 1) {
        return m.to_string();
    }
    return abs_c.get_str() + "*" + m.to_string();
}

} // namespace

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        const bool negative = c < 0;
        const Rational abs_c = abs(c);
        if (first) {
            s += negative ? "-" : "";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        s += term_body(m, abs_c);
    }
    return s;
}

std::string LaurentPoly::to_factored_string() const
{
    if (terms_.size() < 2) {
        return to_string();
    }
    const Monomial g = monomial_content();
    if (g.is_one()) {
        return to_string();
    }
    return g.to_string() + "*(" + shifted(g.inverse()).to_string() + ")";
}

LaurentPoly pow(const LaurentPoly &p, int k)
{
    if (k < 0) {
        return pow(p.inverse(), -k);
    }
    if (p.is_unit()) {
        const auto &[m, c] = *p.terms().begin();
        Rational ck;
        mpz_pow_ui(ck.get_num_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(ck.get_den_mpz_t(), c.get_den_mpz_t(), static_cast<unsigned long>(k));
        return LaurentPoly(m.pow(k), ck);
    }
    LaurentPoly result(1);
    LaurentPoly base = p;
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

LaurentPoly substitute(const LaurentPoly &p, const Bindings &bindings)
{
    if (bindings.empty()) {
        return p;
    }
    LaurentPoly result;
    for (const auto &[m, c] : p.terms()) {
        std::vector<Monomial::value_type> kept;
        LaurentPoly image(c);
        for (const auto &[name, e] : m.exponents()) {
            const auto it = bindings.find(name);
            if (it == bindings.end()) {
                kept.emplace_back(name, e);
                continue;
            }
            if (e < 0 && !it->second.is_unit()) {
                throw NonUnitInverse("substituting " + name + " -> " + it->second.to_string()
                                     + " requires inverting a non-unit");
            }
            image = image * pow(it->second, e);
        }
        result += image.shifted(Monomial::from_pairs(std::move(kept)));
    }
    return result;
}

} // namespace rgcalc
