#include <rgcalc/suites.hpp>

#include <rgcalc/errors.hpp>
#include <rgcalc/grammar.hpp>
#include <rgcalc/parser.hpp>
#include <rgcalc/ramanujan.hpp>
#include <rgcalc/series_equations.hpp>
#include <rgcalc/tables.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

namespace rgcalc
{

namespace
{

std::string str(long v)
{
    return std::to_string(v);
}

std::string text(const Histogram &h)
{
    std::string s = "(";
    for (std::size_t k = 0; k < h.size(); ++k) {
        s += (k ? "," : "") + std::to_string(h[k]);
    }
    return s + ")";
}

RootedTree with_planting(const RootedTree &t, bool planted)
{
    return RootedTree(std::vector<int>(t.parents().begin() + 1, t.parents().end()), planted);
}

std::int64_t ipow(std::int64_t b, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

LaurentPoly histogram_poly(const Histogram &h)
{
    LaurentPoly p;
    for (std::size_t k = 0; k < h.size(); ++k) {
        p.add_term(Monomial::variable("u", static_cast<int>(k)), Rational(static_cast<long>(h[k])));
    }
    return p;
}

std::size_t order_or(const SuiteOptions &o, std::size_t fallback)
{
    return o.order.value_or(fallback);
}

using SuiteFn = std::function<VerifyResult(const SuiteOptions &)>;

VerifyResult from_bool(bool ok, const std::string &what)
{
    return ok ? VerifyResult{true, what} : VerifyResult::fail(what + " failed");
}

VerifyResult with_detail(VerifyResult r, const std::string &what)
{
    if (r.passed && r.detail.empty()) {
        r.detail = what;
    }
    return r;
}

const std::vector<std::pair<std::string, SuiteFn>> &registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"psi-table", [](const SuiteOptions &) { return check_psi_table(); }},
        {"grammar-expansions", [](const SuiteOptions &) { return check_grammar_expansions(); }},
        {"psi-sum",
         [](const SuiteOptions &o) { return from_bool(verify_psi_sum(o.r_max), "sum_k psi_k(r,x) = x^r for r <= " + str(o.r_max)); }},
        {"shor-sum",
         [](const SuiteOptions &o) {
             return from_bool(verify_shor_sum(o.r_max), "sum_k Q_{n,k}(x) = (x+n)^(n-1) for n <= " + str(o.r_max));
         }},
        {"psi-recurrences",
         [](const SuiteOptions &o) {
             return from_bool(psi_via_ramanujan(o.r_max) == psi_via_bew(o.r_max),
                              "both psi recurrences agree for r <= " + str(o.r_max));
         }},
        {"q-recurrences",
         [](const SuiteOptions &o) {
             return from_bool(q_via_shor(o.r_max) == q_table_via_psi(o.r_max),
                              "Shor's recurrence agrees with Q_{n,k}(x) = psi_{k+1}(n-1,x+n) for n <= " + str(o.r_max));
         }},
        {"three-way", [](const SuiteOptions &o) { return check_three_way(o.n_max, o.tree_bound); }},
        {"special-values",
         [](const SuiteOptions &o) -> VerifyResult {
             for (int n = 1; n <= o.n_max; ++n) {
                 const SpecialValues sv = special_values(n);
                 const Histogram r = count_R(n, o.tree_bound);
                 const Histogram t = count_T(n, o.tree_bound);
                 const Histogram leaf = count_R_leaf_one(n, o.tree_bound);
                 for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
                     if (sv.at_zero[k] != r[k] || sv.at_one[k] != t[k] || sv.at_minus_one[k] != leaf[k]) {
                         return VerifyResult::fail("Q(0), Q(1), Q(-1) disagree with the tree counts at n=" + str(n)
                                                   + ", k=" + str(static_cast<long>(k)));
                     }
                 }
             }
             return {true, "Q at 0, 1, -1 match the tree counts for n <= " + str(o.n_max)};
         }},
        {"constants", [](const SuiteOptions &) { return check_constants(); }},
        {"av-identity", [](const SuiteOptions &) { return check_av_identity(2, 8); }},
        {"h-consistency",
         [](const SuiteOptions &o) -> VerifyResult {
             const std::size_t n = order_or(o, 6);
             for (std::size_t i = 0; i <= n; ++i) {
                 if (!verify_h_consistency(i)) {
                     return VerifyResult::fail("D_H^n(a) differs from D^n(a) under b = xv, c = vz at n=" + str(static_cast<long>(i)));
                 }
             }
             return {true, "D_H^n(a) maps to D^n(a) for n <= " + str(static_cast<long>(n))};
         }},
        {"bijection", [](const SuiteOptions &o) { return check_bijection(o.n_max, o.tree_bound); }},
        {"insertion",
         [](const SuiteOptions &o) { return check_insertion(o.n_max, std::min(o.n_max, 6), o.tree_bound); }},
        {"q-bruteforce",
         [](const SuiteOptions &o) -> VerifyResult {
             const QTable q = q_via_shor(std::max(o.n_max, 1));
             for (int n = 1; n <= o.n_max; ++n) {
                 const auto a = q_polys_bruteforce(n, QForm::rooted_at_one, o.tree_bound);
                 const auto b = q_polys_bruteforce(n, QForm::rooted_any, o.tree_bound);
                 for (int k = 0; k < n; ++k) {
                     const auto i = static_cast<std::size_t>(k);
                     if (!(a[i] == q.at(n, k)) || !(b[i] == q.at(n, k))) {
                         return VerifyResult::fail("tree sums disagree with Q at n=" + str(n) + ", k=" + str(k));
                     }
                 }
             }
             return {true, "both tree sums equal Q_{n,k}(x) for n <= " + str(o.n_max)};
         }},
        {"series-R-T", [](const SuiteOptions &o) { return check_series_R_T(order_or(o, 8)); }},
        {"gen-z",
         [](const SuiteOptions &o) {
             return with_detail(verify_gen_z(order_or(o, 5)), "gen(z,t) equation to order " + str(static_cast<long>(order_or(o, 5))));
         }},
        {"gen-u-v",
         [](const SuiteOptions &o) {
             return with_detail(verify_gen_u_and_v(order_or(o, 5)),
                                "gen(u^-1,t) and gen(v^-1,t) equations to order " + str(static_cast<long>(order_or(o, 5))));
         }},
        {"gen-a",
         [](const SuiteOptions &o) {
             return with_detail(verify_gen_a(order_or(o, 4)),
                                "gen(a,t) = a exp(x y / z) to order " + str(static_cast<long>(order_or(o, 4))));
         }},
        {"zeng-Y",
         [](const SuiteOptions &o) {
             return with_detail(verify_zeng_Y(order_or(o, 5), {Rational(0), Rational(1, 2), Rational(-1, 3)}),
                                "Y(u,t) at u = 0, 1/2, -1/3 to order " + str(static_cast<long>(order_or(o, 5))));
         }},
        {"dr-expansions",
         [](const SuiteOptions &o) {
             return with_detail(verify_dr_expansions(order_or(o, 7), std::min(o.n_max, o.tree_bound)),
                                "expansions of y and e^y to order " + str(static_cast<long>(order_or(o, 7))));
         }},
        {"psi-defining",
         [](const SuiteOptions &o) -> VerifyResult {
             const std::size_t m = order_or(o, 8);
             for (int r = 0; r <= 5; ++r) {
                 if (auto res = verify_psi_defining(r, m); !res.passed) {
                     return res;
                 }
             }
             return {true, "defining expansion of psi for r <= 5 to u^" + str(static_cast<long>(m))};
         }},
    };
    return suites;
}

} // namespace

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto &entry : registry()) {
            n.push_back(entry.first);
        }
        return n;
    }();
    return names;
}

bool is_suite(const std::string &name)
{
    const auto &n = suite_names();
    return name == "all" || std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(const std::string &name, const SuiteOptions &options)
{
    SuiteReport report;
    report.suite = name;
    const auto &r = registry();
    const auto it = std::find_if(r.begin(), r.end(), [&](const auto &e) { return e.first == name; });
    if (it == r.end()) {
        report.details = "unknown suite";
        return report;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        const VerifyResult res = it->second(options);
        report.passed = res.passed;
        report.details = res.detail;
    } catch (const std::exception &e) {
        report.passed = false;
        report.details = std::string("error: ") + e.what();
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<SuiteReport> run_suites(const std::string &name, const SuiteOptions &options)
{
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const auto &n : suite_names()) {
            out.push_back(run_suite(n, options));
        }
    } else {
        out.push_back(run_suite(name, options));
    }
    return out;
}

VerifyResult check_psi_table()
{
    static const char *expected[4][4] = {
        {"1", "0", "0", "0"},
        {"x-1", "1", "0", "0"},
        {"x^2-3x+2", "3x-5", "3", "0"},
        {"x^3-6x^2+11x-6", "6x^2-26x+26", "15x-35", "15"},
    };
    static const char *sums[4] = {"1", "x", "x^2", "x^3"};
    const PsiTable psi = psi_via_ramanujan(3);
    for (int r = 0; r <= 3; ++r) {
        UniPoly sum;
        for (int k = 1; k <= 4; ++k) {
            const std::string got = psi.at(r, k).to_string();
            if (got != expected[r][k - 1]) {
                return VerifyResult::fail("psi_" + str(k) + "(" + str(r) + ",x) = " + got + ", expected "
                                          + expected[r][k - 1]);
            }
            sum = sum + psi.at(r, k);
        }
        if (sum.to_string() != sums[r]) {
            return VerifyResult::fail("row " + str(r) + " sums to " + sum.to_string());
        }
    }
    return {true, "10 nonzero entries and 4 row sums"};
}

VerifyResult check_grammar_expansions()
{
    static const char *vz[] = {"v*z", "v^2*z^2*(1 + u)", "v^3*z^3*(2 + 4*u + 3*u^2)",
                               "v^4*z^4*(6 + 18*u + 25*u^2 + 15*u^3)",
                               "v^5*z^5*(24 + 96*u + 190*u^2 + 210*u^3 + 105*u^4)"};
    static const char *z[] = {"z", "v*z^2", "v^2*z^3*(2 + u)", "v^3*z^4*(6 + 7*u + 3*u^2)",
                              "v^4*z^5*(24 + 46*u + 40*u^2 + 15*u^3)"};
    const Grammar g = preset("G_R");
    const auto dvz = derivative_chain(g, parse_expression("v*z"), 4);
    const auto dz = derivative_chain(g, parse_expression("z"), 4);
    for (std::size_t n = 0; n <= 4; ++n) {
        if (!(dvz[n] == parse_expression(vz[n]))) {
            return VerifyResult::fail("D^" + str(static_cast<long>(n)) + "(vz) = " + dvz[n].to_factored_string());
        }
        if (!(dz[n] == parse_expression(z[n]))) {
            return VerifyResult::fail("D^" + str(static_cast<long>(n)) + "(z) = " + dz[n].to_factored_string());
        }
    }
    return {true, "D^n(vz) and D^n(z) for n <= 4"};
}

VerifyResult check_three_way(int n_max, int tree_bound)
{
    const QTable q = q_via_shor(std::max(n_max, 1));
    auto q_at = [&](int n, const Rational &x) {
        Histogram h;
        for (int k = 0; k < n; ++k) {
            h.push_back(q.at(n, k).evaluate(x).get_num().get_si());
        }
        return h;
    };
    for (int n = 1; n <= n_max; ++n) {
        const Histogram g = grammar_R(n);
        const Histogram c = count_R(n, tree_bound);
        const Histogram e = q_at(n, Rational(0));
        if (g != c || c != e) {
            return VerifyResult::fail("R at n=" + str(n) + ": grammar " + text(g) + ", trees " + text(c) + ", Q(0) "
                                      + text(e));
        }
        const Histogram gt = grammar_T(n);
        const Histogram ct = count_T(n, tree_bound);
        const Histogram et = q_at(n, Rational(1));
        if (gt != ct || ct != et) {
            return VerifyResult::fail("T at n=" + str(n) + ": grammar " + text(gt) + ", trees " + text(ct) + ", Q(1) "
                                      + text(et));
        }
    }
    return {true, "grammar, tree counts and Q evaluations agree for R(n,k), T(n,k), n <= " + str(n_max)};
}

VerifyResult check_constants()
{
    struct Relation
    {
        const char *grammar;
        const char *f;
        const char *df;
    };
    static const Relation relations[] = {
        {"G_R", "u^-1*v", "0"},
        {"G_R", "z*exp(u^-1)", "0"},
        {"G_R", "(u - 1)*v^-1*z^-1", "1"},
        {"G_R", "z^-1 - u^-1*z^-1", "u^-1*v"},
        {"G_R", "exp(u^-1)*(u*v^-1 - v^-1)", "z*exp(u^-1)"},
        {"H", "u*c^-1*exp(-u^-1)", "0"},
        {"H", "b*c^-1", "0"},
        {"H", "a*exp(b*c^-1*u^-1)", "0"},
        {"H", "(u - 1)*c^-1", "1"},
        {"G_Q", "v*u^-1", "0"},
        {"G_Q", "z*x^-1", "0"},
        {"G_Q", "(u - 1)*x^-1*u^-1", "v*z*x^-1*u^-1"},
    };
    for (const Relation &r : relations) {
        const Grammar g = preset(r.grammar);
        const ExpExpr got = derive(g, parse_in(g, r.f));
        if (!(got == parse_in(g, r.df))) {
            return VerifyResult::fail(std::string("under ") + r.grammar + ", D(" + r.f + ") = " + got.to_string()
                                      + ", expected " + r.df);
        }
    }
    return {true, str(static_cast<long>(std::size(relations))) + " relations"};
}

VerifyResult check_av_identity(int n_min, int n_max)
{
    const Grammar g = preset("G_Q");
    const auto da = derivative_chain(g, parse_expression("a"), static_cast<std::size_t>(std::max(n_max - 1, 0)));
    const auto dav = derivative_chain(g, parse_expression("a*v"), static_cast<std::size_t>(std::max(n_max - 2, 0)));
    const ExpExpr c1 = parse_expression("(u - 1)*x^-1*u^-1");
    const ExpExpr vu = parse_expression("v*u^-1");
    const ExpExpr zx = parse_expression("z*x^-1");
    for (int n = n_min; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const ExpExpr rhs = c1 * da[i - 1] + vu * (ExpExpr(1) + zx * Rational(n - 2)) * da[i - 2];
        if (!(dav[i - 2] == rhs)) {
            return VerifyResult::fail("identity fails at n=" + str(n));
        }
    }
    return {true, "holds for " + str(n_min) + " <= n <= " + str(n_max)};
}

VerifyResult check_bijection(int n_max, int tree_bound)
{
    long cells = 0;
    for (int n = 2; n <= n_max; ++n) {
        const BijectionTable b = bijection_counts(n, tree_bound);
        if (!b.balanced()) {
            for (std::size_t k = 0; k < b.left.size(); ++k) {
                for (std::size_t r = 0; r < b.left[k].size(); ++r) {
                    if (b.left[k][r] != b.right[k][r]) {
                        return VerifyResult::fail("n=" + str(n) + ", k=" + str(static_cast<long>(k)) + ", r="
                                                  + str(static_cast<long>(r)) + ": " + str(b.left[k][r]) + " vs "
                                                  + str(b.right[k][r]));
                    }
                }
            }
            return VerifyResult::fail("n=" + str(n) + ": table shapes differ");
        }
        for (const auto &row : b.left) {
            cells += static_cast<long>(row.size());
        }
    }
    return {true, str(cells) + " (k, r) cells balanced for n <= " + str(n_max)};
}

VerifyResult check_insertion(int n_max, int roundtrip_max, int tree_bound)
{
    for (int n = 1; n <= n_max; ++n) {
        std::vector<RootedTree> gen;
        generate_via_insertion(
            n, InsertionSeed::planted_edge, [&](const RootedTree &t) { gen.push_back(with_planting(t, false)); },
            tree_bound);
        std::vector<RootedTree> all = all_rooted(n, tree_bound);
        std::sort(gen.begin(), gen.end());
        std::sort(all.begin(), all.end());
        if (static_cast<std::int64_t>(gen.size()) != ipow(n, n - 1)
            || std::adjacent_find(gen.begin(), gen.end()) != gen.end() || gen != all) {
            return VerifyResult::fail("planted seed at n=" + str(n) + ": " + str(static_cast<long>(gen.size()))
                                      + " trees, oracle " + str(static_cast<long>(all.size())));
        }

        std::vector<RootedTree> gen1;
        std::vector<RootedTree> all1;
        generate_via_insertion(
            n, InsertionSeed::single_vertex, [&](const RootedTree &t) { gen1.push_back(t); }, tree_bound);
        enumerate_rooted_at_one(n, [&](const RootedTree &t) { all1.push_back(t); }, tree_bound);
        std::sort(gen1.begin(), gen1.end());
        std::sort(all1.begin(), all1.end());
        const std::int64_t expected = n == 1 ? 1 : ipow(n, n - 2);
        if (static_cast<std::int64_t>(gen1.size()) != expected
            || std::adjacent_find(gen1.begin(), gen1.end()) != gen1.end() || gen1 != all1) {
            return VerifyResult::fail("single-vertex seed at n=" + str(n) + ": " + str(static_cast<long>(gen1.size()))
                                      + " trees, oracle " + str(static_cast<long>(all1.size())));
        }

        if (n < 2 || n > roundtrip_max) {
            continue;
        }
        for (const RootedTree &t : all) {
            const RootedTree p = with_planting(t, true);
            const auto [prev, how] = delete_max(p);
            if (!(apply_insertion(prev, how) == p)) {
                return VerifyResult::fail("delete_max does not invert " + p.to_string());
            }
            for (const Insertion &ins : legal_insertions(prev)) {
                const auto back = delete_max(apply_insertion(prev, ins));
                if (!(back.first == prev) || !(back.second == ins)) {
                    return VerifyResult::fail("delete_max after " + ins.to_string() + " on " + prev.to_string());
                }
            }
        }
        for (const RootedTree &t : all1) {
            const auto [prev, how] = delete_max(t);
            if (!(apply_insertion(prev, how) == t)) {
                return VerifyResult::fail("delete_max does not invert " + t.to_string());
            }
        }
    }
    return {true, "insertion generates every tree once for n <= " + str(n_max) + "; delete_max inverts for n <= "
                      + str(roundtrip_max)};
}

VerifyResult check_series_R_T(std::size_t order)
{
    const auto egf_r = egf_coefficients(solve_equation({EquationKind::r_eq, {}}, order));
    const auto egf_t = egf_coefficients(solve_equation({EquationKind::t_eq, {}}, order));
    for (std::size_t n = 1; n <= order; ++n) {
        const int ni = static_cast<int>(n);
        if (!(egf_r[n] == histogram_poly(grammar_R(ni)))) {
            return VerifyResult::fail("R-eq coefficient " + str(ni) + " is " + egf_r[n].to_string());
        }
        if (!(egf_t[n] == histogram_poly(grammar_T(ni)))) {
            return VerifyResult::fail("T-eq coefficient " + str(ni) + " is " + egf_t[n].to_string());
        }
    }
    if (auto r = verify_T_equals_expR(order); !r.passed) {
        return r;
    }
    return {true, "R-eq and T-eq match the grammar polynomials and exp(R) = T to order " + str(static_cast<long>(order))};
}

} // namespace rgcalc
