#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <rgcalc/exp_expr.hpp>
#include <rgcalc/series.hpp>

namespace rgcalc
{

// A context-free grammar in Chen's sense: one substitution rule per variable.
// The alphabet is exactly the set of variables with a rule; a variable meant
// to be constant must be declared as `var -> 0`.
class Grammar
{
public:
    Grammar() = default;

    // Throws UnknownVariable if a right-hand side uses a variable without a
    // rule.
    explicit Grammar(std::map<Symbol, LaurentPoly> rules);

    const std::map<Symbol, LaurentPoly> &rules() const noexcept { return rules_; }
    const std::set<Symbol> &alphabet() const noexcept { return alphabet_; }

    // rule(var) / var; D(m) = m * sum_var exponent(var) * log_rule(var).
    const LaurentPoly &log_rule(const Symbol &var) const;

    // "u -> u^2*v*z; v -> ..." in alphabet order.
    std::string to_string() const;

private:
    std::map<Symbol, LaurentPoly> rules_;
    std::map<Symbol, LaurentPoly> log_rules_;
    std::set<Symbol> alphabet_;
};

// Grammar text: `var -> expr` rules separated by ';' or newlines, '#'
// comments. Errors: SyntaxError(line, col), UnknownVariable.
Grammar parse_grammar(std::string_view src);

// Built-in grammars:
//   G_R  z -> v*z^2; v -> u*v^2*z; u -> u^2*v*z            (improper-edge labels)
//   G_Q  G_R plus a -> a*x*v; x -> x*v*z                    (root and root-children labels)
//   H    a -> a*b; b -> b*c*(1 + u); c -> c^2*(1 + u); u -> c*u^2
//   DR   A -> A^3*S; S -> A*S^2
std::optional<Grammar> find_preset(std::string_view name);
Grammar preset(std::string_view name);
const std::vector<std::string> &preset_names();

// Parses an expression restricted to the grammar's alphabet.
ExpExpr parse_in(const Grammar &g, std::string_view expr);

// The formal derivative: a derivation extending the rules, with
// D(exp(L)) = D(L) exp(L). Throws UnknownVariable for variables outside
// the alphabet.
LaurentPoly derive(const Grammar &g, const LaurentPoly &p);
ExpExpr derive(const Grammar &g, const ExpExpr &e);

// D^0(e), ..., D^n(e); each entry is computed from the previous one.
std::vector<ExpExpr> derivative_chain(const Grammar &g, const ExpExpr &e, std::size_t n);

ExpExpr derive_n(const Grammar &g, const ExpExpr &e, std::size_t n);

// D^order(e) == 0. order must be positive.
bool is_constant(const Grammar &g, const ExpExpr &e, std::size_t order = 1);

// The eigenvalue c with D(e) = c*e and D(c) = 0, when e is a single term
// with a unit coefficient and such a c exists; nullopt otherwise.
std::optional<ExpExpr> is_eigenfunction(const Grammar &g, const ExpExpr &e);

// gen(e, t) = sum_n D^n(e) t^n / n!, truncated at `order`.
TruncatedSeries<ExpExpr> gen_series(const Grammar &g, const ExpExpr &e, std::size_t order);

// substitute(D_H^n(a), {b -> x*v, c -> v*z}) == D_{G_Q}^n(a).
bool verify_h_consistency(std::size_t n);

} // namespace rgcalc
