#pragma once

#include <optional>
#include <string>
#include <vector>

#include <rgcalc/identities.hpp>

namespace rgcalc
{

struct SuiteOptions
{
    int r_max = 12;                       // recurrence tables: psi rows and Q rows
    int n_max = 7;                        // tree enumeration
    std::optional<std::size_t> order;     // series order; each suite has its own default
    int tree_bound = default_tree_bound;  // hard cap on tree sizes
};

struct SuiteReport
{
    std::string suite;
    bool passed = false;
    std::string details;
    double elapsed_seconds = 0;
};

// Suite names in run order; "all" is accepted by run_suites but not listed.
const std::vector<std::string> &suite_names();

bool is_suite(const std::string &name);

// Runs one suite. Exceptions become failed reports.
SuiteReport run_suite(const std::string &name, const SuiteOptions &options);

// "all" expands to every suite.
std::vector<SuiteReport> run_suites(const std::string &name, const SuiteOptions &options);

// ---- checks shared by several suites ----

// psi_k(r, x) for r <= 3 against the printed table, including row sums.
VerifyResult check_psi_table();

// D^n(vz) and D^n(z) for n <= 4 against the listed expansions.
VerifyResult check_grammar_expansions();

// For n <= n_max: grammar coefficients, tree counts and Q evaluations agree,
// for R(n, .) with Q(0) and for T(n-1, .), T(n, .) with Q(1).
VerifyResult check_three_way(int n_max, int tree_bound = default_tree_bound);

// The constants and relations of G_R, of H and of G_Q.
VerifyResult check_constants();

// D^(n-2)(av) = (u-1)/(xu) D^(n-1)(a) + (v/u)(1 + (n-2) z/x) D^(n-2)(a).
VerifyResult check_av_identity(int n_min, int n_max);

VerifyResult check_bijection(int n_max, int tree_bound = default_tree_bound);

// Both insertion generators against the enumeration oracles for n <= n_max,
// and delete_max round trips for n <= roundtrip_max.
VerifyResult check_insertion(int n_max, int roundtrip_max, int tree_bound = default_tree_bound);

// Solved R-eq and T-eq coefficients against the grammar polynomials.
VerifyResult check_series_R_T(std::size_t order);

} // namespace rgcalc
