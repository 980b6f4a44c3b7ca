#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <rgcalc/uni_poly.hpp>

namespace rgcalc
{

// psi_k(r, x) for 0 <= r <= r_max. Entries outside 1 <= k <= r+1 read as 0.
class PsiTable
{
public:
    explicit PsiTable(int r_max);

    int r_max() const noexcept { return r_max_; }
    const UniPoly &at(int r, int k) const;
    void set(int r, int k, UniPoly p);

    friend bool operator==(const PsiTable &, const PsiTable &) = default;

private:
    int r_max_;
    std::vector<std::vector<UniPoly>> rows_; // rows_[r][k], k = 0..r+1
};

// Q_{n,k}(x) for 1 <= n <= n_max, 0 <= k <= n-1. Other entries read as 0.
class QTable
{
public:
    explicit QTable(int n_max);

    int n_max() const noexcept { return n_max_; }
    const UniPoly &at(int n, int k) const;
    void set(int n, int k, UniPoly p);

    friend bool operator==(const QTable &, const QTable &) = default;

private:
    int n_max_;
    std::vector<std::vector<UniPoly>> rows_; // rows_[n][k]
};

// psi_k(r+1,x) = (x-1) psi_k(r,x-1) + psi_{k-1}(r+1,x) - psi_{k-1}(r+1,x-1),
// psi_1(0,x) = 1. Filled by increasing r, then increasing k.
PsiTable psi_via_ramanujan(int r_max);

// psi_k(r,x) = (x-r-k+1) psi_k(r-1,x) + (r+k-2) psi_{k-1}(r-1,x), with the
// same boundary values.
PsiTable psi_via_bew(int r_max);

// Q_{n,k}(x) = (x-k+1) Q_{n-1,k}(x+1) + (n+k-2) Q_{n-1,k-1}(x+1), Q_{1,0} = 1.
QTable q_via_shor(int n_max);

// Q_{n,k}(x) = psi_{k+1}(n-1, x+n). Throws TableTooSmall if psi lacks r = n-1.
UniPoly q_via_psi(int n, int k, const PsiTable &psi);
QTable q_table_via_psi(int n_max);

// sum_{k=1}^{r+1} psi_k(r,x) == x^r for every r <= r_max.
bool verify_psi_sum(int r_max);

// sum_{k=0}^{n-1} Q_{n,k}(x) == (x+n)^(n-1) for every n <= n_max.
bool verify_shor_sum(int n_max);

// Q_{n,k} evaluated at 0, 1 and -1, indexed by k.
struct SpecialValues
{
    std::vector<Integer> at_zero;
    std::vector<Integer> at_one;
    std::vector<Integer> at_minus_one;
};

SpecialValues special_values(int n);

} // namespace rgcalc
