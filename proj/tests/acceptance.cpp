// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// An optional argument names the rgcalc executable; the psi table criterion
// then also checks the command-line output.

#include <rgcalc/grammar.hpp>
#include <rgcalc/parser.hpp>
#include <rgcalc/ramanujan.hpp>
#include <rgcalc/suites.hpp>
#include <rgcalc/tables.hpp>

#include "random_exprs.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace rgcalc;
using rgcalc::testing::Gen;

namespace
{

std::string cli_path;

std::vector<std::vector<std::string>> tokens(const std::string &text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> row;
        for (std::string w; ls >> w;) {
            row.push_back(w);
        }
        if (!row.empty()) {
            rows.push_back(row);
        }
    }
    return rows;
}

std::string run_command(const std::string &cmd)
{
    std::string out;
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) {
        return out;
    }
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) {
        out.append(buf, n);
    }
    pclose(p);
    return out;
}

VerifyResult all_of(std::initializer_list<std::function<VerifyResult()>> checks)
{
    std::string detail;
    for (const auto &c : checks) {
        VerifyResult r = c();
        if (!r.passed) {
            return r;
        }
        if (!r.detail.empty()) {
            detail += (detail.empty() ? "" : "; ") + r.detail;
        }
    }
    return {true, detail};
}

VerifyResult expect(bool ok, const std::string &what)
{
    return ok ? VerifyResult{true, ""} : VerifyResult::fail(what);
}

VerifyResult criterion_table1()
{
    const std::vector<std::vector<std::string>> expected = {
        {"r\\k", "1", "2", "3", "4", "Σ_k"},
        {"0", "1", "0", "0", "0", "1"},
        {"1", "x-1", "1", "0", "0", "x"},
        {"2", "x^2-3x+2", "3x-5", "3", "0", "x^2"},
        {"3", "x^3-6x^2+11x-6", "6x^2-26x+26", "15x-35", "15", "x^3"},
    };
    const std::string rendered = render_psi(psi_via_ramanujan(3), TableFormat::pretty);
    if (tokens(rendered) != expected) {
        return VerifyResult::fail("rendered table differs:\n" + rendered);
    }
    if (!cli_path.empty()) {
        const std::string out = run_command("'" + cli_path + "' table psi --r-max 3");
        if (tokens(out) != expected) {
            return VerifyResult::fail("command output differs:\n" + out);
        }
    }
    return all_of({check_psi_table, [] { return VerifyResult{true, cli_path.empty() ? "library rendering" : "library and command-line rendering"}; }});
}

VerifyResult criterion_expansions()
{
    const Grammar g = preset("G_R");
    const ExpExpr d4vz = derive_n(g, parse_expression("v*z"), 4) * pow(parse_expression("v*z"), -5);
    const ExpExpr d4z = derive_n(g, parse_expression("z"), 4) * pow(parse_expression("v"), -4)
                        * pow(parse_expression("z"), -5);
    return all_of({
        check_grammar_expansions,
        [&] { return expect(d4vz == parse_expression("24 + 96*u + 190*u^2 + 210*u^3 + 105*u^4"), "D^4(vz) coefficients"); },
        [&] { return expect(d4z == parse_expression("24 + 46*u + 40*u^2 + 15*u^3"), "D^4(z) coefficients"); },
    });
}

VerifyResult criterion_identities()
{
    return all_of({
        [] { return expect(verify_psi_sum(12), "psi row sums"); },
        [] { return expect(verify_shor_sum(12), "Shor's row sums"); },
        [] { return expect(psi_via_ramanujan(12) == psi_via_bew(12), "psi recurrences"); },
        [] { return expect(q_via_shor(12) == q_table_via_psi(12), "Q recurrences"); },
        [] { return VerifyResult{true, "r, n <= 12"}; },
    });
}

VerifyResult criterion_series()
{
    return all_of({
        [] { return check_series_R_T(8); },
        [] { return verify_gen_z(5); },
        [] { return verify_gen_u_and_v(5); },
        [] { return verify_gen_a(4); },
        [] { return verify_zeng_Y(5, {Rational(0), Rational(1, 2), Rational(-1, 3)}); },
        [] { return verify_dr_expansions(7); },
        [] {
            for (int r = 0; r <= 5; ++r) {
                if (auto res = verify_psi_defining(r, 8); !res.passed) {
                    return res;
                }
            }
            return VerifyResult{true, "gen checks, Y(u,t), expansions and psi defining relation"};
        },
    });
}

VerifyResult criterion_properties()
{
    constexpr int cases = 1000;
    const Grammar gr = preset("G_R");
    long failures = 0;
    std::string first;
    auto record = [&](bool ok, const std::string &what) {
        if (!ok) {
            if (failures++ == 0) {
                first = what;
            }
        }
    };

    Gen g(2024);
    for (int i = 0; i < cases; ++i) {
        const LaurentPoly a = g.poly(), b = g.poly(), c = g.poly();
        record(a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c)
                   && a * (b + c) == a * b + a * c && a - a == LaurentPoly() && a * LaurentPoly(1) == a,
               "ring axioms for " + a.to_string() + ", " + b.to_string() + ", " + c.to_string());
        const ExpExpr x = g.expr(), y = g.expr(), z = g.expr();
        record(x + y == y + x && x * y == y * x && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z,
               "ring axioms for " + x.to_string() + ", " + y.to_string() + ", " + z.to_string());
    }
    for (int i = 0; i < cases; ++i) {
        const ExpExpr f = g.expr(), h = g.expr();
        const auto df = derivative_chain(gr, f, 5);
        const auto dh = derivative_chain(gr, h, 5);
        const auto dfh = derivative_chain(gr, f * h, 5);
        for (long n = 0; n <= 5; ++n) {
            ExpExpr sum;
            for (long k = 0; k <= n; ++k) {
                sum += df[static_cast<std::size_t>(k)] * dh[static_cast<std::size_t>(n - k)] * Rational(binomial(n, k));
            }
            record(dfh[static_cast<std::size_t>(n)] == sum, "Leibniz at n=" + std::to_string(n) + " for " + f.to_string()
                                                                + ", " + h.to_string());
        }
    }
    for (int i = 0; i < cases; ++i) {
        const ExpExpr f = g.expr(), h = g.expr();
        record(gen_series(gr, f * h, 4) == gen_series(gr, f, 4) * gen_series(gr, h, 4),
               "gen multiplicativity for " + f.to_string() + ", " + h.to_string());
    }
    for (int i = 0; i < cases; ++i) {
        const Bindings units{{"u", g.unit()}, {"v", g.unit()}};
        const LaurentPoly a = g.poly(), b = g.poly();
        record(substitute(a * b, units) == substitute(a, units) * substitute(b, units)
                   && substitute(a + b, units) == substitute(a, units) + substitute(b, units),
               "substitution of units into " + a.to_string() + ", " + b.to_string());
        const Bindings any{{"u", g.poly({"v", "z"}, 2, 0, 2)}, {"z", g.poly({"u", "v"}, 2, 0, 2)}};
        const LaurentPoly p = g.poly({"u", "v", "z"}, 3, 0, 2), q = g.poly({"u", "v", "z"}, 3, 0, 2);
        record(substitute(p * q, any) == substitute(p, any) * substitute(q, any),
               "substitution into " + p.to_string() + ", " + q.to_string());
    }
    if (failures > 0) {
        return VerifyResult::fail(std::to_string(failures) + " failures, first: " + first);
    }
    return {true, "4 properties x 1000 cases"};
}

struct Criterion
{
    int number;
    std::string title;
    double budget_seconds;
    std::function<VerifyResult()> run;
};

} // namespace

int main(int argc, char **argv)
{
    if (argc > 1) {
        cli_path = argv[1];
    }
    const std::vector<Criterion> criteria = {
        {1, "psi table reproduction", 1, criterion_table1},
        {2, "grammar expansions", 1, criterion_expansions},
        {3, "three-way agreement", 60, [] { return check_three_way(7); }},
        {4, "identity suite", 5, criterion_identities},
        {5, "constant suites", 1, check_constants},
        {6, "D^(n-2)(av) identity", 10, [] { return check_av_identity(2, 8); }},
        {7, "bijection cardinalities", 60, [] { return check_bijection(7); }},
        {8, "series suite", 30, criterion_series},
        {9, "insertion completeness", 60, [] { return check_insertion(7, 6); }},
        {10, "property tests", 30, criterion_properties},
    };
    int failed = 0;
    for (const Criterion &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        VerifyResult r;
        try {
            r = c.run();
        } catch (const std::exception &e) {
            r = VerifyResult::fail(std::string("error: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.passed && secs > c.budget_seconds) {
            r = VerifyResult::fail("took longer than " + std::to_string(c.budget_seconds) + "s");
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", secs);
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << timing
                  << ")";
        if (!r.detail.empty()) {
            std::cout << " - " << r.detail;
        }
        std::cout << '\n';
        failed += r.passed ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all 10 criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
