#include <rgcalc/errors.hpp>
#include <rgcalc/grammar.hpp>
#include <rgcalc/parser.hpp>
#include <rgcalc/ramanujan.hpp>
#include <rgcalc/series_equations.hpp>
#include <rgcalc/suites.hpp>
#include <rgcalc/tables.hpp>
#include <rgcalc/trees.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace rgcalc;

namespace
{

constexpr int default_tree_n = 7;
constexpr int recurrence_cap = 200;
constexpr std::size_t order_cap = 40;

int tree_cap()
{
    if (const char *env = std::getenv("RG_MAX_N")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw Error(std::string("RG_MAX_N must be a positive integer, got '") + env + "'");
    }
    return default_tree_bound;
}

void check_cap(const char *what, long value, long cap)
{
    if (value > cap) {
        throw BoundExceeded(std::string(what) + " = " + std::to_string(value) + " exceeds the limit "
                            + std::to_string(cap));
    }
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot read grammar file '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Grammar load_grammar(const std::string &name)
{
    if (auto g = find_preset(name)) {
        return *g;
    }
    return parse_grammar(read_file(name));
}

struct TableArgs
{
    std::string kind;
    std::optional<int> r_max;
    std::optional<int> n;
    std::string format = "pretty";
    bool cross_check = false;
};

int cmd_table(const TableArgs &a)
{
    const TableFormat format = parse_table_format(a.format);
    std::string out;
    VerifyResult check;
    if (a.kind == "psi") {
        const int r_max = a.r_max.value_or(a.n.value_or(3));
        if (r_max < 0) {
            throw Error("--r-max must be nonnegative");
        }
        check_cap("r-max", r_max, recurrence_cap);
        const PsiTable psi = psi_via_ramanujan(r_max);
        if (a.cross_check) {
            check = cross_check_psi(psi);
        }
        out = render_psi(psi, format);
    } else if (a.kind == "Q") {
        const int n = a.n.value_or(a.r_max.value_or(default_tree_n));
        if (n < 1) {
            throw Error("--n must be positive");
        }
        check_cap("n", n, recurrence_cap);
        const QTable q = q_via_shor(n);
        if (a.cross_check) {
            check = cross_check_q(q, std::min(tree_cap(), default_tree_n));
        }
        out = render_q(q, format);
    } else {
        const int n = a.n.value_or(default_tree_n);
        if (n < 1) {
            throw Error("--n must be positive");
        }
        const int cap = tree_cap();
        std::vector<Histogram> rows;
        for (int i = 1; i <= n; ++i) {
            rows.push_back(a.kind == "R" ? count_R(i, cap) : count_T(i, cap));
        }
        if (a.cross_check) {
            check = cross_check_counts(a.kind[0], rows);
        }
        out = render_counts(a.kind[0], rows, format);
    }
    if (!check.passed) {
        std::cerr << "cross-check failed: " << check.detail << '\n';
        return 1;
    }
    std::cout << out;
    return 0;
}

struct DeriveArgs
{
    std::string grammar = "G_R";
    std::string expr;
    int n = 1;
    bool expanded = false;
};

int cmd_derive(const DeriveArgs &a)
{
    if (a.n < 0) {
        throw Error("--n must be nonnegative");
    }
    const Grammar g = load_grammar(a.grammar);
    const ExpExpr d = derive_n(g, parse_in(g, a.expr), static_cast<std::size_t>(a.n));
    std::cout << (a.expanded ? d.to_string() : d.to_factored_string()) << '\n';
    return 0;
}

struct VerifyArgs
{
    std::string suite = "all";
    std::optional<int> r_max;
    std::optional<int> n_max;
    std::optional<std::size_t> order;
    bool timing = false;
};

int cmd_verify(const VerifyArgs &a)
{
    if (!is_suite(a.suite)) {
        std::string names;
        for (const auto &n : suite_names()) {
            names += " " + n;
        }
        throw Error("unknown suite '" + a.suite + "'; available: all" + names);
    }
    SuiteOptions o;
    o.tree_bound = tree_cap();
    if (a.r_max) {
        check_cap("r-max", *a.r_max, recurrence_cap);
        o.r_max = *a.r_max;
    }
    if (a.n_max) {
        o.n_max = *a.n_max;
    }
    if (a.order) {
        check_cap("order", static_cast<long>(*a.order), static_cast<long>(order_cap));
        o.order = a.order;
    }
    const auto reports = run_suites(a.suite, o);
    bool all_passed = true;
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const SuiteReport &r : reports) {
        nlohmann::ordered_json j = {{"suite", r.suite}, {"status", r.passed ? "pass" : "fail"}, {"details", r.details}};
        if (a.timing) {
            j["elapsed"] = r.elapsed_seconds;
        }
        suites.push_back(j);
        all_passed = all_passed && r.passed;
    }
    const nlohmann::ordered_json out = {{"schema", 1}, {"status", all_passed ? "pass" : "fail"}, {"suites", suites}};
    std::cout << out.dump(2) << '\n';
    return all_passed ? 0 : 1;
}

struct SeriesArgs
{
    std::string equation;
    std::size_t order = 8;
    std::optional<std::string> u;
    std::vector<std::string> subst;
};

int cmd_series(const SeriesArgs &a)
{
    const auto kind = parse_equation_name(a.equation);
    if (!kind) {
        throw Error("unknown equation '" + a.equation + "'; available: R-eq T-eq Y-grammar-eq Y-zeng-eq");
    }
    check_cap("order", static_cast<long>(a.order), static_cast<long>(order_cap));
    SeriesEquation eq{*kind, {}};
    nlohmann::ordered_json subst = nlohmann::ordered_json::object();
    auto bind = [&](const std::string &var, const std::string &value) {
        const LaurentPoly p = parse_expression(value).as_polynomial();
        eq.substitutions[var] = p;
        subst[var] = p.to_string();
    };
    if (a.u) {
        bind("u", *a.u);
    }
    for (const std::string &s : a.subst) {
        const auto eqpos = s.find('=');
        if (eqpos == std::string::npos || eqpos == 0) {
            throw Error("--subst expects var=expr, got '" + s + "'");
        }
        bind(s.substr(0, eqpos), s.substr(eqpos + 1));
    }
    const PolySeries y = solve_equation(eq, a.order);
    const PolySeries res = residual(eq, y);
    nlohmann::ordered_json first = nullptr;
    for (std::size_t n = 0; n <= res.order(); ++n) {
        if (!res[n].is_zero()) {
            first = n;
            break;
        }
    }
    nlohmann::ordered_json coeffs = y.to_strings();
    nlohmann::ordered_json egf = nlohmann::ordered_json::array();
    for (const LaurentPoly &c : egf_coefficients(y)) {
        egf.push_back(c.to_string());
    }
    const nlohmann::ordered_json out = {{"schema", 1},
                                {"equation", equation_name(*kind)},
                                {"order", a.order},
                                {"substitutions", subst},
                                {"coefficients", coeffs},
                                {"egf", egf},
                                {"residual", {{"zero", first.is_null()}, {"first_nonzero_order", first}}}};
    std::cout << out.dump(2) << '\n';
    return first.is_null() ? 0 : 1;
}

struct TreesArgs
{
    int n = 3;
    bool rooted_at_one = false;
    std::string via = "prufer";
    bool histogram = false;
};

int cmd_trees(const TreesArgs &a)
{
    const int cap = tree_cap();
    if (a.via != "prufer" && a.via != "insertion") {
        throw Error("--via must be prufer or insertion");
    }
    Histogram hist(static_cast<std::size_t>(std::max(a.n, 1)), 0);
    std::int64_t total = 0;
    const TreeVisitor visit = [&](const RootedTree &t) {
        ++total;
        if (a.histogram) {
            ++hist[static_cast<std::size_t>(improper_count(t))];
        } else {
            std::cout << t.to_string() << '\n';
        }
    };
    if (a.via == "insertion") {
        generate_via_insertion(a.n, a.rooted_at_one ? InsertionSeed::single_vertex : InsertionSeed::planted_edge,
                               visit, cap);
    } else if (a.rooted_at_one) {
        enumerate_rooted_at_one(a.n, visit, cap);
    } else {
        enumerate_rooted(a.n, visit, cap);
    }
    if (a.histogram) {
        const nlohmann::ordered_json out = {{"schema", 1},      {"n", a.n},          {"rooted_at_1", a.rooted_at_one},
                                    {"via", a.via},     {"histogram", hist}, {"total", total}};
        std::cout << out.dump(2) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Grammatical calculus for the Ramanujan polynomials"};
    app.require_subcommand(1);

    TableArgs table;
    auto *t = app.add_subcommand("table", "Print psi, Q, R or T tables");
    t->add_option("kind", table.kind, "psi | Q | R | T")->required()->check(CLI::IsMember({"psi", "Q", "R", "T"}));
    t->add_option("--r-max", table.r_max, "Largest r for psi (default 3)");
    t->add_option("--n", table.n, "Largest n for Q, R, T (default 7)");
    t->add_option("--format", table.format, "pretty | csv | json")->check(CLI::IsMember({"pretty", "csv", "json"}));
    t->add_flag("--cross-check", table.cross_check, "Recompute the table independently before printing");

    DeriveArgs derive_args;
    auto *d = app.add_subcommand("derive", "Apply the formal derivative n times");
    d->add_option("--grammar", derive_args.grammar, "Preset name (G_R, G_Q, H, DR) or grammar file");
    d->add_option("--expr", derive_args.expr, "Expression to differentiate")->required();
    d->add_option("--n", derive_args.n, "Number of derivatives (default 1)");
    d->add_flag("--expanded", derive_args.expanded, "Print fully expanded instead of factored");

    VerifyArgs verify;
    auto *v = app.add_subcommand("verify", "Run verification suites and print a JSON report");
    v->add_option("--suite", verify.suite, "Suite name or 'all'");
    v->add_option("--r-max", verify.r_max, "Recurrence bound (default 12)");
    v->add_option("--n-max", verify.n_max, "Tree enumeration bound (default 7)");
    v->add_option("--order", verify.order, "Series order (per-suite default)");
    v->add_flag("--timing", verify.timing, "Include elapsed seconds per suite");

    SeriesArgs series;
    auto *s = app.add_subcommand("series", "Solve a functional equation as a truncated series");
    s->add_option("--equation", series.equation, "R-eq | T-eq | Y-grammar-eq | Y-zeng-eq")->required();
    s->add_option("--order", series.order, "Truncation order (default 8)");
    s->add_option("--u", series.u, "Value substituted for u, e.g. 1/2");
    s->add_option("--subst", series.subst, "Substitution var=expr (repeatable)");

    TreesArgs trees;
    auto *tr = app.add_subcommand("trees", "Enumerate rooted trees");
    tr->add_option("--n", trees.n, "Number of vertices (default 3)");
    tr->add_flag("--rooted-at-1", trees.rooted_at_one, "Only trees rooted at 1");
    tr->add_option("--via", trees.via, "prufer | insertion")->check(CLI::IsMember({"prufer", "insertion"}));
    tr->add_flag("--histogram", trees.histogram, "Print the improper-edge histogram instead of the trees");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*t) {
            return cmd_table(table);
        }
        if (*d) {
            return cmd_derive(derive_args);
        }
        if (*v) {
            return cmd_verify(verify);
        }
        if (*s) {
            return cmd_series(series);
        }
        return cmd_trees(trees);
    } catch (const SyntaxError &e) {
        std::cerr << e.what() << '\n';
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
}
