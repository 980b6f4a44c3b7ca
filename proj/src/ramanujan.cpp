#include <rgcalc/ramanujan.hpp>

#include <stdexcept>
#include <string>

#include <rgcalc/errors.hpp>

namespace rgcalc
{

namespace
{

const UniPoly zero_poly{};

UniPoly linear(long c0)
{
    // x + c0
    return UniPoly(std::vector<Rational>{Rational(c0), Rational(1)});
}

} // namespace

PsiTable::PsiTable(int r_max) : r_max_(r_max)
{
    if (r_max < 0) {
        throw std::invalid_argument("r_max must be nonnegative");
    }
    rows_.resize(static_cast<std::size_t>(r_max) + 1);
    for (int r = 0; r <= r_max; ++r) {
        rows_[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(r) + 2);
    }
}

const UniPoly &PsiTable::at(int r, int k) const
{
    if (r < 0 || r > r_max_ || k < 1 || k > r + 1) {
        if (r > r_max_) {
            throw TableTooSmall("psi table covers r <= " + std::to_string(r_max_) + ", requested r = "
                                + std::to_string(r));
        }
        return zero_poly;
    }
    return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
}

void PsiTable::set(int r, int k, UniPoly p)
{
    rows_.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(k)) = std::move(p);
}

QTable::QTable(int n_max) : n_max_(n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be positive");
    }
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) {
        rows_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n));
    }
}

const UniPoly &QTable::at(int n, int k) const
{
    if (n > n_max_) {
        throw TableTooSmall("Q table covers n <= " + std::to_string(n_max_) + ", requested n = " + std::to_string(n));
    }
    if (n < 1 || k < 0 || k > n - 1) {
        return zero_poly;
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void QTable::set(int n, int k, UniPoly p)
{
    rows_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k)) = std::move(p);
}

PsiTable psi_via_ramanujan(int r_max)
{
    PsiTable t(r_max);
    t.set(0, 1, UniPoly(1));
    const UniPoly x_minus_1 = linear(-1);
    for (int r = 0; r < r_max; ++r) {
        // k = 1 first: psi_k(r+1, .) needs psi_{k-1}(r+1, .).
        for (int k = 1; k <= r + 2; ++k) {
            const UniPoly &prev = t.at(r + 1, k - 1);
            UniPoly p = x_minus_1 * t.at(r, k).shifted(-1) + prev - prev.shifted(-1);
            t.set(r + 1, k, std::move(p));
        }
    }
    return t;
}

PsiTable psi_via_bew(int r_max)
{
    PsiTable t(r_max);
    t.set(0, 1, UniPoly(1));
    for (int r = 1; r <= r_max; ++r) {
        for (int k = 1; k <= r + 1; ++k) {
            UniPoly p = linear(-r - k + 1) * t.at(r - 1, k) + Rational(r + k - 2) * t.at(r - 1, k - 1);
            t.set(r, k, std::move(p));
        }
    }
    return t;
}

QTable q_via_shor(int n_max)
{
    QTable q(n_max);
    q.set(1, 0, UniPoly(1));
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 0; k <= n - 1; ++k) {
            UniPoly p = linear(1 - k) * q.at(n - 1, k).shifted(1)
                        + Rational(n + k - 2) * q.at(n - 1, k - 1).shifted(1);
            q.set(n, k, std::move(p));
        }
    }
    return q;
}

UniPoly q_via_psi(int n, int k, const PsiTable &psi)
{
    if (n < 1) {
        throw std::invalid_argument("n must be positive");
    }
    if (n - 1 > psi.r_max()) {
        throw TableTooSmall("Q_{" + std::to_string(n) + "," + std::to_string(k) + "} needs psi at r = "
                            + std::to_string(n - 1));
    }
    return psi.at(n - 1, k + 1).shifted(n);
}

QTable q_table_via_psi(int n_max)
{
    const PsiTable psi = psi_via_ramanujan(n_max - 1);
    QTable q(n_max);
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 0; k < n; ++k) {
            q.set(n, k, q_via_psi(n, k, psi));
        }
    }
    return q;
}

bool verify_psi_sum(int r_max)
{
    const PsiTable t = psi_via_ramanujan(r_max);
    UniPoly x_pow(1);
    for (int r = 0; r <= r_max; ++r) {
        UniPoly sum;
        for (int k = 1; k <= r + 1; ++k) {
            sum += t.at(r, k);
        }
        if (sum != x_pow) {
            return false;
        }
        x_pow = x_pow * UniPoly::x();
    }
    return true;
}

bool verify_shor_sum(int n_max)
{
    const QTable q = q_via_shor(n_max);
    for (int n = 1; n <= n_max; ++n) {
        UniPoly sum;
        for (int k = 0; k < n; ++k) {
            sum += q.at(n, k);
        }
        UniPoly expected(1);
        for (int i = 0; i < n - 1; ++i) {
            expected = expected * linear(n);
        }
        if (sum != expected) {
            return false;
        }
    }
    return true;
}

SpecialValues special_values(int n)
{
    const QTable q = q_via_shor(n);
    SpecialValues out;
    for (int k = 0; k < n; ++k) {
        const UniPoly &p = q.at(n, k);
        out.at_zero.push_back(p.evaluate(Rational(0)).get_num());
        out.at_one.push_back(p.evaluate(Rational(1)).get_num());
        out.at_minus_one.push_back(p.evaluate(Rational(-1)).get_num());
    }
    return out;
}

} // namespace rgcalc
