#include <rgcalc/monomial.hpp>

#include <algorithm>

namespace rgcalc
{

Monomial Monomial::variable(const Symbol &name, int exponent)
{
    Monomial m;
    if (exponent != 0) {
        m.exps_.emplace_back(name, exponent);
    }
    return m;
}

Monomial Monomial::from_pairs(std::vector<value_type> pairs)
{
    std::sort(pairs.begin(), pairs.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    Monomial m;
    for (auto &[name, e] : pairs) {
        if (!m.exps_.empty() && m.exps_.back().first == name) {
            m.exps_.back().second += e;
        } else {
            m.exps_.emplace_back(std::move(name), e);
        }
    }
    std::erase_if(m.exps_, [](const value_type &p) { return p.second == 0; });
    return m;
}

int Monomial::exponent(const Symbol &name) const
{
    const auto it = std::lower_bound(exps_.begin(), exps_.end(), name,
                                     [](const value_type &p, const Symbol &s) { return p.first < s; });
    return (it != exps_.end() && it->first == name) ? it->second : 0;
}

long Monomial::degree() const noexcept
{
    long d = 0;
    for (const auto &p : exps_) {
        d += p.second;
    }
    return d;
}

Monomial Monomial::inverse() const
{
    return pow(-1);
}

Monomial Monomial::pow(int k) const
{
    if (k == 0) {
        return {};
    }
    Monomial r(*this);
    for (auto &p : r.exps_) {
        p.second *= k;
    }
    return r;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial r;
    r.exps_.reserve(a.exps_.size() + b.exps_.size());
    auto ia = a.exps_.begin();
    auto ib = b.exps_.begin();
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (ia->first < ib->first) {
            r.exps_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            r.exps_.push_back(*ib++);
        } else {
            if (const int e = ia->second + ib->second; e != 0) {
                r.exps_.emplace_back(ia->first, e);
            }
            ++ia;
            ++ib;
        }
    }
    r.exps_.insert(r.exps_.end(), ia, a.exps_.end());
    r.exps_.insert(r.exps_.end(), ib, b.exps_.end());
    return r;
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
{
    if (const auto c = a.degree() <=> b.degree(); c != 0) {
        return c;
    }
    auto ia = a.exps_.begin();
    auto ib = b.exps_.begin();
    while (ia != a.exps_.end() || ib != b.exps_.end()) {
        int ea = 0;
        int eb = 0;
        if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
            ea = ia->second;
            ++ia;
        } else if (ia == a.exps_.end() || ib->first < ia->first) {
            eb = ib->second;
            ++ib;
        } else {
            ea = ia->second;
            eb = ib->second;
            ++ia;
            ++ib;
        }
        if (ea != eb) {
            return ea <=> eb;
        }
    }
    return std::strong_ordering::equal;
}

Monomial gcd(const Monomial &a, const Monomial &b)
{
    std::vector<Monomial::value_type> out;
    auto ia = a.exps_.begin();
    auto ib = b.exps_.begin();
    while (ia != a.exps_.end() || ib != b.exps_.end()) {
        if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first)) {
            if (ia->second < 0) {
                out.push_back(*ia);
            }
            ++ia;
        } else if (ia == a.exps_.end() || ib->first < ia->first) {
            if (ib->second < 0) {
                out.push_back(*ib);
            }
            ++ib;
        } else {
            out.emplace_back(ia->first, std::min(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    return Monomial::from_pairs(std::move(out));
}

std::string Monomial::to_string() const
{
    if (exps_.empty()) {
        return "1";
    }
    std::string s;
    for (const auto &[name, e] : exps_) {
        if (!s.empty()) {
            s += '*';
        }
        s += name;
        if (e != 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

} // namespace rgcalc
