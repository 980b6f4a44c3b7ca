#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include <rgcalc/exp_expr.hpp>

namespace rgcalc
{

// Parses the text syntax produced by ExpExpr::to_string():
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'|'+'] integer | '^' '(' ['-'|'+'] integer ')')?
//   atom   := integer | identifier | 'exp' '(' expr ')' | '(' expr ')'
//
// Division and negative powers are only defined for unit divisors. exp()
// takes a Laurent polynomial argument. When `alphabet` is given, identifiers
// outside of it raise UnknownVariable. Malformed input raises SyntaxError
// with a 1-based line/column.
ExpExpr parse_expression(std::string_view src, const std::set<Symbol> *alphabet = nullptr);

struct RuleText
{
    Symbol variable;
    LaurentPoly rhs;
    std::size_t line;
    std::size_t column;
};

// Splits grammar text into `var -> expr` rules separated by ';' or newlines,
// with '#' comments. Right-hand sides must be Laurent polynomials. Does not
// check variable membership; see parse_grammar().
std::vector<RuleText> parse_rule_list(std::string_view src);

} // namespace rgcalc
