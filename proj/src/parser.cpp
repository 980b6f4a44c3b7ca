#include <rgcalc/parser.hpp>

#include <cctype>
#include <string>

#include <rgcalc/errors.hpp>

namespace rgcalc
{

namespace
{

enum class Tok
{
    number,
    ident,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    arrow,
    semi,
    newline,
    end,
};

struct Token
{
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token &t)
{
    switch (t.kind) {
        case Tok::end:
            return "end of input";
        case Tok::newline:
            return "end of line";
        default:
            return "'" + t.text + "'";
    }
}

class Lexer
{
public:
    Lexer(std::string_view src, bool newline_tokens) : src_(src), newline_tokens_(newline_tokens) {}

    Token next()
    {
        skip_blank();
        const std::size_t line = line_;
        const std::size_t col = col_;
        if (pos_ >= src_.size()) {
            return {Tok::end, "", line, col};
        }
        const char ch = src_[pos_];
        if (ch == '\n') {
            advance();
            return {Tok::newline, "\\n", line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string s;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                s += src_[pos_];
                advance();
            }
            return {Tok::number, s, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string s;
            while (pos_ < src_.size()
                   && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                s += src_[pos_];
                advance();
            }
            return {Tok::ident, s, line, col};
        }
        advance();
        switch (ch) {
            case '+':
                return {Tok::plus, "+", line, col};
            case '-':
                if (pos_ < src_.size() && src_[pos_] == '>') {
                    advance();
                    return {Tok::arrow, "->", line, col};
                }
                return {Tok::minus, "-", line, col};
            case '*':
                return {Tok::star, "*", line, col};
            case '/':
                return {Tok::slash, "/", line, col};
            case '^':
                return {Tok::caret, "^", line, col};
            case '(':
                return {Tok::lparen, "(", line, col};
            case ')':
                return {Tok::rparen, ")", line, col};
            case ';':
                return {Tok::semi, ";", line, col};
            default:
                throw SyntaxError(line, col, std::string("unexpected character '") + ch + "'");
        }
    }

private:
    void advance()
    {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank()
    {
        while (pos_ < src_.size()) {
            const char ch = src_[pos_];
            if (ch == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else if (ch == '\n' && newline_tokens_) {
                return;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    bool newline_tokens_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser
{
public:
    Parser(std::string_view src, bool newline_tokens, const std::set<Symbol> *alphabet)
        : lexer_(src, newline_tokens), alphabet_(alphabet)
    {
        cur_ = lexer_.next();
    }

    const Token &peek() const { return cur_; }

    Token take()
    {
        Token t = cur_;
        cur_ = lexer_.next();
        return t;
    }

    Token expect(Tok kind, const char *what)
    {
        if (cur_.kind != kind) {
            fail(std::string("expected ") + what + ", found " + describe(cur_));
        }
        return take();
    }

    [[noreturn]] void fail(const std::string &msg) const { throw SyntaxError(cur_.line, cur_.column, msg); }

    ExpExpr expr()
    {
        ExpExpr acc = term();
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            const bool sub = take().kind == Tok::minus;
            ExpExpr rhs = term();
            if (sub) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    ExpExpr term()
    {
        ExpExpr acc = unary();
        while (cur_.kind == Tok::star || cur_.kind == Tok::slash) {
            const bool div = take().kind == Tok::slash;
            const Token at = cur_;
            ExpExpr rhs = unary();
            if (div) {
                if (rhs.is_zero()) {
                    throw SyntaxError(at.line, at.column, "division by zero");
                }
                acc = acc * rhs.inverse();
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    ExpExpr unary()
    {
        if (cur_.kind == Tok::minus) {
            take();
            return -unary();
        }
        if (cur_.kind == Tok::plus) {
            take();
            return unary();
        }
        return power();
    }

    ExpExpr power()
    {
        ExpExpr base = atom();
        if (cur_.kind != Tok::caret) {
            return base;
        }
        take();
        const bool paren = cur_.kind == Tok::lparen;
        if (paren) {
            take();
        }
        bool negative = false;
        if (cur_.kind == Tok::minus || cur_.kind == Tok::plus) {
            negative = take().kind == Tok::minus;
        }
        const Token num = expect(Tok::number, "integer exponent");
        if (num.text.size() > 9) {
            throw SyntaxError(num.line, num.column, "exponent too large");
        }
        if (paren) {
            expect(Tok::rparen, "')'");
        }
        const int k = std::stoi(num.text) * (negative ? -1 : 1);
        if (k < 0 && !base.is_unit()) {
            throw NonUnitInverse("negative power of non-unit " + base.to_string());
        }
        return pow(base, k);
    }

    ExpExpr atom()
    {
        const Token t = cur_;
        switch (t.kind) {
            case Tok::number:
                take();
                return ExpExpr(Rational(Integer(t.text, 10)));
            case Tok::lparen: {
                take();
                ExpExpr inner = expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            case Tok::ident: {
                take();
                if (t.text == "exp" && cur_.kind == Tok::lparen) {
                    take();
                    const Token arg_at = cur_;
                    ExpExpr arg = expr();
                    expect(Tok::rparen, "')'");
                    if (!arg.is_polynomial()) {
                        throw SyntaxError(arg_at.line, arg_at.column, "exp() argument must be a Laurent polynomial");
                    }
                    return ExpExpr::exp(arg.as_polynomial());
                }
                if (alphabet_ != nullptr && alphabet_->count(t.text) == 0) {
                    throw UnknownVariable(t.text);
                }
                return ExpExpr(LaurentPoly::variable(t.text));
            }
            default:
                fail("expected a number, variable, exp(...) or '(', found " + describe(t));
        }
    }

private:
    Lexer lexer_;
    const std::set<Symbol> *alphabet_;
    Token cur_;
};

} // namespace

ExpExpr parse_expression(std::string_view src, const std::set<Symbol> *alphabet)
{
    Parser p(src, false, alphabet);
    ExpExpr e = p.expr();
    if (p.peek().kind != Tok::end) {
        p.fail("unexpected " + describe(p.peek()));
    }
    return e;
}

std::vector<RuleText> parse_rule_list(std::string_view src)
{
    Parser p(src, true, nullptr);
    std::vector<RuleText> rules;
    while (true) {
        while (p.peek().kind == Tok::newline || p.peek().kind == Tok::semi) {
            p.take();
        }
        if (p.peek().kind == Tok::end) {
            break;
        }
        const Token name = p.expect(Tok::ident, "variable name");
        p.expect(Tok::arrow, "'->'");
        const Token rhs_at = p.peek();
        ExpExpr rhs = p.expr();
        if (!rhs.is_polynomial()) {
            throw SyntaxError(rhs_at.line, rhs_at.column, "rule right-hand side must be a Laurent polynomial");
        }
        const Tok k = p.peek().kind;
        if (k != Tok::semi && k != Tok::newline && k != Tok::end) {
            p.fail("expected ';' or end of line, found " + describe(p.peek()));
        }
        rules.push_back({name.text, rhs.as_polynomial(), name.line, name.column});
    }
    return rules;
}

} // namespace rgcalc
