#pragma once

#include <string>
#include <string_view>

#include <rgcalc/identities.hpp>
#include <rgcalc/ramanujan.hpp>
#include <rgcalc/trees.hpp>

namespace rgcalc
{

enum class TableFormat
{
    pretty,
    csv,
    json,
};

TableFormat parse_table_format(std::string_view name);

// psi_k(r, x) for 0 <= r <= r_max. The pretty layout has one column per k
// and a final column with the row sum.
std::string render_psi(const PsiTable &psi, TableFormat format);

// Q_{n,k}(x) for 1 <= n <= n_max.
std::string render_q(const QTable &q, TableFormat format);

// R(n,k) or T(n,k) for 1 <= n <= n_max; rows[n - 1] is the histogram for n.
std::string render_counts(char kind, const std::vector<Histogram> &rows, TableFormat format);

// Histogram of D^(n-1)(vz) / (v z)^n under G_R, indexed by the power of u.
Histogram grammar_R(int n);

// Histogram of D^n(z) / (v^n z^(n+1)) under G_R.
Histogram grammar_T(int n);

// Independent recomputations of each table before printing.
VerifyResult cross_check_psi(const PsiTable &psi);
VerifyResult cross_check_q(const QTable &q, int tree_bound);
VerifyResult cross_check_counts(char kind, const std::vector<Histogram> &rows);

} // namespace rgcalc
