#include <rgcalc/tables.hpp>

#include <rgcalc/errors.hpp>
#include <rgcalc/grammar.hpp>
#include <rgcalc/parser.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace rgcalc
{

namespace
{

using Grid = std::vector<std::vector<std::string>>;

std::size_t display_width(const std::string &s)
{
    // Count code points so that "Σ" occupies one column.
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string layout(const Grid &grid)
{
    std::vector<std::size_t> widths;
    for (const auto &row : grid) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t j = 0; j < row.size(); ++j) {
            widths[j] = std::max(widths[j], display_width(row[j]));
        }
    }
    std::ostringstream out;
    for (const auto &row : grid) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            line += row[j];
            if (j + 1 < row.size()) {
                line.append(widths[j] - display_width(row[j]) + 3, ' ');
            }
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
    }
    return out.str();
}

std::string coefficient_list(const UniPoly &p)
{
    std::string s;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0) {
            s += ';';
        }
        s += to_string(p.coefficient(i));
    }
    return s.empty() ? "0" : s;
}

nlohmann::ordered_json coefficient_json(const UniPoly &p)
{
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        a.push_back(to_string(p.coefficient(i)));
    }
    return a;
}

std::string dump(const nlohmann::ordered_json &j)
{
    return j.dump(2) + "\n";
}

Histogram polynomial_histogram(const LaurentPoly &p, const char *var, int length)
{
    Histogram h(static_cast<std::size_t>(length), 0);
    for (const auto &[m, c] : p.terms()) {
        const int k = m.exponent(var);
        if (k < 0 || k >= length || m.degree() != k || c.get_den() != 1) {
            throw Error("unexpected term " + m.to_string() + " in " + p.to_string());
        }
        h[static_cast<std::size_t>(k)] = c.get_num().get_si();
    }
    return h;
}

std::string histogram_text(const Histogram &h)
{
    std::string s = "(";
    for (std::size_t k = 0; k < h.size(); ++k) {
        s += (k ? "," : "") + std::to_string(h[k]);
    }
    return s + ")";
}

} // namespace

TableFormat parse_table_format(std::string_view name)
{
    if (name == "pretty") {
        return TableFormat::pretty;
    }
    if (name == "csv") {
        return TableFormat::csv;
    }
    if (name == "json") {
        return TableFormat::json;
    }
    throw Error("unknown table format '" + std::string(name) + "'");
}

std::string render_psi(const PsiTable &psi, TableFormat format)
{
    const int r_max = psi.r_max();
    switch (format) {
    case TableFormat::pretty: {
        Grid grid;
        std::vector<std::string> header{"r\\k"};
        for (int k = 1; k <= r_max + 1; ++k) {
            header.push_back(std::to_string(k));
        }
        header.push_back("Σ_k");
        grid.push_back(header);
        for (int r = 0; r <= r_max; ++r) {
            std::vector<std::string> row{std::to_string(r)};
            UniPoly sum;
            for (int k = 1; k <= r_max + 1; ++k) {
                row.push_back(psi.at(r, k).to_string());
                sum = sum + psi.at(r, k);
            }
            row.push_back(sum.to_string());
            grid.push_back(row);
        }
        return layout(grid);
    }
    case TableFormat::csv: {
        std::string out = "r,k,coefficients\n";
        for (int r = 0; r <= r_max; ++r) {
            for (int k = 1; k <= r + 1; ++k) {
                out += std::to_string(r) + "," + std::to_string(k) + "," + coefficient_list(psi.at(r, k)) + "\n";
            }
        }
        return out;
    }
    case TableFormat::json: {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int r = 0; r <= r_max; ++r) {
            for (int k = 1; k <= r + 1; ++k) {
                const UniPoly &p = psi.at(r, k);
                rows.push_back({{"r", r}, {"k", k}, {"coefficients", coefficient_json(p)}, {"text", p.to_string()}});
            }
        }
        return dump({{"schema", 1}, {"table", "psi"}, {"r_max", r_max}, {"rows", rows}});
    }
    }
    return {};
}

std::string render_q(const QTable &q, TableFormat format)
{
    const int n_max = q.n_max();
    switch (format) {
    case TableFormat::pretty: {
        Grid grid;
        std::vector<std::string> header{"n\\k"};
        for (int k = 0; k < n_max; ++k) {
            header.push_back(std::to_string(k));
        }
        grid.push_back(header);
        for (int n = 1; n <= n_max; ++n) {
            std::vector<std::string> row{std::to_string(n)};
            for (int k = 0; k < n; ++k) {
                row.push_back(q.at(n, k).to_string());
            }
            grid.push_back(row);
        }
        return layout(grid);
    }
    case TableFormat::csv: {
        std::string out = "n,k,coefficients\n";
        for (int n = 1; n <= n_max; ++n) {
            for (int k = 0; k < n; ++k) {
                out += std::to_string(n) + "," + std::to_string(k) + "," + coefficient_list(q.at(n, k)) + "\n";
            }
        }
        return out;
    }
    case TableFormat::json: {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int n = 1; n <= n_max; ++n) {
            for (int k = 0; k < n; ++k) {
                const UniPoly &p = q.at(n, k);
                rows.push_back({{"n", n}, {"k", k}, {"coefficients", coefficient_json(p)}, {"text", p.to_string()}});
            }
        }
        return dump({{"schema", 1}, {"table", "Q"}, {"n_max", n_max}, {"rows", rows}});
    }
    }
    return {};
}

std::string render_counts(char kind, const std::vector<Histogram> &rows, TableFormat format)
{
    const std::string name(1, kind);
    switch (format) {
    case TableFormat::pretty: {
        Grid grid;
        std::vector<std::string> header{"n\\k"};
        for (std::size_t k = 0; k < rows.size(); ++k) {
            header.push_back(std::to_string(k));
        }
        header.push_back("Σ_k");
        grid.push_back(header);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::vector<std::string> row{std::to_string(i + 1)};
            std::int64_t sum = 0;
            for (std::size_t k = 0; k < rows.size(); ++k) {
                const std::int64_t c = k < rows[i].size() ? rows[i][k] : 0;
                row.push_back(k < rows[i].size() ? std::to_string(c) : "");
                sum += c;
            }
            row.push_back(std::to_string(sum));
            grid.push_back(row);
        }
        return layout(grid);
    }
    case TableFormat::csv: {
        std::string out = "n,k,value\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t k = 0; k < rows[i].size(); ++k) {
                out += std::to_string(i + 1) + "," + std::to_string(k) + "," + std::to_string(rows[i][k]) + "\n";
            }
        }
        return out;
    }
    case TableFormat::json: {
        nlohmann::ordered_json out_rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t k = 0; k < rows[i].size(); ++k) {
                out_rows.push_back({{"n", i + 1}, {"k", k}, {"value", rows[i][k]}});
            }
        }
        return dump({{"schema", 1}, {"table", name}, {"n_max", rows.size()}, {"rows", out_rows}});
    }
    }
    return {};
}

Histogram grammar_R(int n)
{
    const Grammar g = preset("G_R");
    const ExpExpr vz = parse_expression("v*z");
    const ExpExpr d = derive_n(g, vz, static_cast<std::size_t>(n - 1)) * pow(vz, -n);
    return polynomial_histogram(d.as_polynomial(), "u", n);
}

Histogram grammar_T(int n)
{
    const Grammar g = preset("G_R");
    const ExpExpr d = derive_n(g, parse_expression("z"), static_cast<std::size_t>(n))
                      * pow(parse_expression("v"), -n) * pow(parse_expression("z"), -(n + 1));
    return polynomial_histogram(d.as_polynomial(), "u", std::max(n, 1));
}

VerifyResult cross_check_psi(const PsiTable &psi)
{
    if (!(psi_via_bew(psi.r_max()) == psi)) {
        return VerifyResult::fail("psi: the two recurrences disagree");
    }
    if (!verify_psi_sum(psi.r_max())) {
        return VerifyResult::fail("psi: a row sum differs from x^r");
    }
    return {};
}

VerifyResult cross_check_q(const QTable &q, int tree_bound)
{
    if (!(q_table_via_psi(q.n_max()) == q)) {
        return VerifyResult::fail("Q: Shor's recurrence disagrees with the psi table");
    }
    for (int n = 1; n <= std::min(q.n_max(), tree_bound); ++n) {
        const auto b = q_polys_bruteforce(n, QForm::rooted_at_one, tree_bound);
        for (int k = 0; k < n; ++k) {
            if (!(b[static_cast<std::size_t>(k)] == q.at(n, k))) {
                return VerifyResult::fail("Q: tree enumeration disagrees at n=" + std::to_string(n)
                                          + ", k=" + std::to_string(k));
            }
        }
    }
    return {};
}

VerifyResult cross_check_counts(char kind, const std::vector<Histogram> &rows)
{
    const int n_max = static_cast<int>(rows.size());
    const QTable q = q_via_shor(std::max(n_max, 1));
    const Rational at = kind == 'R' ? Rational(0) : Rational(1);
    for (int n = 1; n <= n_max; ++n) {
        const Histogram &h = rows[static_cast<std::size_t>(n - 1)];
        const Histogram g = kind == 'R' ? grammar_R(n) : grammar_T(n);
        if (g != h) {
            return VerifyResult::fail(std::string(1, kind) + ": grammar gives " + histogram_text(g) + " at n="
                                      + std::to_string(n) + ", trees give " + histogram_text(h));
        }
        for (int k = 0; k < n; ++k) {
            if (q.at(n, k).evaluate(at) != Rational(h[static_cast<std::size_t>(k)])) {
                return VerifyResult::fail(std::string(1, kind) + ": Q evaluation disagrees at n=" + std::to_string(n)
                                          + ", k=" + std::to_string(k));
            }
        }
    }
    return {};
}

} // namespace rgcalc
