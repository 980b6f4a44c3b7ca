#include <rgcalc/grammar.hpp>

#include <rgcalc/errors.hpp>
#include <rgcalc/parser.hpp>

namespace rgcalc
{

Grammar::Grammar(std::map<Symbol, LaurentPoly> rules) : rules_(std::move(rules))
{
    for (const auto &[var, rhs] : rules_) {
        alphabet_.insert(var);
    }
    for (const auto &[var, rhs] : rules_) {
        for (const auto &used : rhs.variables()) {
            if (alphabet_.count(used) == 0) {
                throw UnknownVariable(used);
            }
        }
        log_rules_.emplace(var, rhs.shifted(Monomial::variable(var, -1)));
    }
}

const LaurentPoly &Grammar::log_rule(const Symbol &var) const
{
    const auto it = log_rules_.find(var);
    if (it == log_rules_.end()) {
        throw UnknownVariable(var);
    }
    return it->second;
}

std::string Grammar::to_string() const
{
    std::string s;
    for (const auto &[var, rhs] : rules_) {
        if (!s.empty()) {
            s += "; ";
        }
        s += var + " -> " + rhs.to_string();
    }
    return s;
}

Grammar parse_grammar(std::string_view src)
{
    std::map<Symbol, LaurentPoly> rules;
    const auto parsed = parse_rule_list(src);
    for (const auto &r : parsed) {
        if (!rules.emplace(r.variable, r.rhs).second) {
            throw SyntaxError(r.line, r.column, "duplicate rule for '" + r.variable + "'");
        }
    }
    return Grammar(std::move(rules));
}

namespace
{

struct PresetText
{
    const char *name;
    const char *text;
};

constexpr PresetText presets[] = {
    {"G_R", "z -> v*z^2; v -> u*v^2*z; u -> u^2*v*z"},
    {"G_Q", "a -> a*x*v; x -> x*v*z; z -> v*z^2; v -> u*v^2*z; u -> u^2*v*z"},
    {"H", "a -> a*b; b -> b*c*(1 + u); c -> c^2*(1 + u); u -> c*u^2"},
    {"DR", "A -> A^3*S; S -> A*S^2"},
};

void check_alphabet(const Grammar &g, const std::set<Symbol> &vars)
{
    for (const auto &v : vars) {
        if (g.alphabet().count(v) == 0) {
            throw UnknownVariable(v);
        }
    }
}

// Derivative of a polynomial whose variables are already known to be in the
// alphabet. Negative exponents need no special case: the exponent factor in
// D(m) = m * sum e_v * rule(v)/v is exactly D(v^-1) = -v^-2 D(v).
LaurentPoly derive_unchecked(const Grammar &g, const LaurentPoly &p)
{
    LaurentPoly out;
    for (const auto &[m, c] : p.terms()) {
        for (const auto &[var, e] : m.exponents()) {
            const Rational scale = c * e;
            for (const auto &[rm, rc] : g.log_rule(var).terms()) {
                out.add_term(m * rm, scale * rc);
            }
        }
    }
    return out;
}

ExpExpr derive_unchecked(const Grammar &g, const ExpExpr &e)
{
    ExpExpr out;
    for (const auto &[arg, coeff] : e.terms()) {
        LaurentPoly c = derive_unchecked(g, coeff);
        if (!arg.is_zero()) {
            c += coeff * derive_unchecked(g, arg);
        }
        out.add_term(c, arg);
    }
    return out;
}

} // namespace

std::optional<Grammar> find_preset(std::string_view name)
{
    for (const auto &p : presets) {
        if (name == p.name) {
            return parse_grammar(p.text);
        }
    }
    return std::nullopt;
}

Grammar preset(std::string_view name)
{
    if (auto g = find_preset(name)) {
        return *std::move(g);
    }
    throw Error("unknown grammar preset '" + std::string(name) + "'");
}

const std::vector<std::string> &preset_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &p : presets) {
            out.emplace_back(p.name);
        }
        return out;
    }();
    return names;
}

ExpExpr parse_in(const Grammar &g, std::string_view expr)
{
    return parse_expression(expr, &g.alphabet());
}

LaurentPoly derive(const Grammar &g, const LaurentPoly &p)
{
    check_alphabet(g, p.variables());
    return derive_unchecked(g, p);
}

ExpExpr derive(const Grammar &g, const ExpExpr &e)
{
    check_alphabet(g, e.variables());
    return derive_unchecked(g, e);
}

std::vector<ExpExpr> derivative_chain(const Grammar &g, const ExpExpr &e, std::size_t n)
{
    check_alphabet(g, e.variables());
    std::vector<ExpExpr> chain;
    chain.reserve(n + 1);
    chain.push_back(e);
    for (std::size_t i = 0; i < n; ++i) {
        chain.push_back(derive_unchecked(g, chain.back()));
    }
    return chain;
}

ExpExpr derive_n(const Grammar &g, const ExpExpr &e, std::size_t n)
{
    check_alphabet(g, e.variables());
    ExpExpr cur = e;
    for (std::size_t i = 0; i < n && !cur.is_zero(); ++i) {
        cur = derive_unchecked(g, cur);
    }
    return cur;
}

bool is_constant(const Grammar &g, const ExpExpr &e, std::size_t order)
{
    if (order == 0) {
        throw std::invalid_argument("constant order must be positive");
    }
    return derive_n(g, e, order).is_zero();
}

std::optional<ExpExpr> is_eigenfunction(const Grammar &g, const ExpExpr &e)
{
    if (e.is_zero()) {
        throw std::invalid_argument("the zero expression has no eigenvalue");
    }
    const ExpExpr de = derive(g, e);
    if (!e.is_unit()) {
        return std::nullopt;
    }
    ExpExpr c = de * e.inverse();
    if (!(c * e == de) || !derive(g, c).is_zero()) {
        return std::nullopt;
    }
    return c;
}

TruncatedSeries<ExpExpr> gen_series(const Grammar &g, const ExpExpr &e, std::size_t order)
{
    auto chain = derivative_chain(g, e, order);
    TruncatedSeries<ExpExpr> s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = std::move(chain[n]) * inverse_factorial(static_cast<unsigned>(n));
    }
    return s;
}

bool verify_h_consistency(std::size_t n)
{
    const Grammar h = preset("H");
    const Grammar gq = preset("G_Q");
    const ExpExpr a(LaurentPoly::variable("a"));
    const Bindings to_g{{"b", parse_expression("x*v").as_polynomial()}, {"c", parse_expression("v*z").as_polynomial()}};
    return substitute(derive_n(h, a, n), to_g) == derive_n(gq, a, n);
}

} // namespace rgcalc
