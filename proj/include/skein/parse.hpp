#pragma once

/*
  Text grammar shared by the library and the CLI:

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := primary (['*'] primary)*          -- '*' is optional (juxtaposition)
    primary := INT | 'A' ['^' SINT] | 't' ['^' UINT] | 'S' '_' UINT | '(' expr ')'
               | ('-'|'+') primary

  Whitespace is insignificant. Example: "A^3 + 2A + 2A^-1 + A^-3".

  Expressions built only from Laurent atoms and S_k tokens (combined linearly,
  with ring-element scaling) parse to a Chebyshev-basis TPoly; everything else
  parses to the monomial basis. print/parse round-trips are exact, including
  the basis.
*/

#include "skein/chebyshev.hpp"

#include <cctype>
#include <string>

namespace skein {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t column, const std::string& what)
        : std::runtime_error("syntax error at column " + std::to_string(column) + ": " + what),
          column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

namespace detail {

struct Token {
    enum class Kind { Int, VarA, VarT, ChebS, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t col = 0;  // 1-based
    Int value = 0;        // Int: magnitude; ChebS: index
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token next() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_ = Token{Token::Kind::End, pos_ + 1, 0};
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        const std::size_t col = pos_ + 1;
        switch (c) {
            case '+': current_ = {Token::Kind::Plus, col, 0}; ++pos_; return;
            case '-': current_ = {Token::Kind::Minus, col, 0}; ++pos_; return;
            case '*': current_ = {Token::Kind::Star, col, 0}; ++pos_; return;
            case '^': current_ = {Token::Kind::Caret, col, 0}; ++pos_; return;
            case '(': current_ = {Token::Kind::LParen, col, 0}; ++pos_; return;
            case ')': current_ = {Token::Kind::RParen, col, 0}; ++pos_; return;
            case 'A': current_ = {Token::Kind::VarA, col, 0}; ++pos_; return;
            case 't': current_ = {Token::Kind::VarT, col, 0}; ++pos_; return;
            case 'S': {
                ++pos_;
                if (pos_ >= text_.size() || text_[pos_] != '_')
                    throw parse_error(pos_ + 1, "expected '_' after 'S'");
                ++pos_;
                current_ = {Token::Kind::ChebS, col, lex_digits("Chebyshev index")};
                return;
            }
            default:
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    current_ = {Token::Kind::Int, col, lex_digits("integer")};
                    return;
                }
                throw parse_error(col, std::string("unexpected character '") + c + "'");
        }
    }

    Int lex_digits(const char* what) {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error(pos_ + 1, std::string("expected ") + what);
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

// Parsed value with enough bookkeeping to reconstruct the basis: `cheb` stays
// meaningful while the expression is a ring-linear combination of S_k tokens
// (scalars count as multiples of S_0).
struct PValue {
    TPoly mono{Basis::Monomial};
    TPoly cheb{Basis::Chebyshev};
    bool scalar = true;    // no t or S token involved
    bool s_linear = true;  // representable in the S-basis without conversion

    static PValue from_scalar(const LaurentPoly& c) {
        PValue v;
        v.mono = TPoly::scalar(c);
        v.cheb = TPoly::term(c, 0, Basis::Chebyshev);
        return v;
    }
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    TPoly parse() {
        PValue v = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End) throw parse_error(t.col, "unexpected trailing input");
        if (saw_s_ && v.s_linear) return v.cheb.is_zero() ? TPoly(Basis::Chebyshev) : v.cheb;
        return v.mono.is_zero() ? TPoly(Basis::Monomial) : v.mono;
    }

private:
    static PValue add(const PValue& a, const PValue& b, bool subtract) {
        PValue r;
        r.mono = subtract ? a.mono - b.mono : a.mono + b.mono;
        r.scalar = a.scalar && b.scalar;
        r.s_linear = a.s_linear && b.s_linear;
        if (r.s_linear) r.cheb = subtract ? a.cheb - b.cheb : a.cheb + b.cheb;
        return r;
    }

    static PValue mul(const PValue& a, const PValue& b) {
        PValue r;
        r.mono = tpoly_mul(a.mono, b.mono);
        r.scalar = a.scalar && b.scalar;
        if (a.scalar && b.s_linear) {
            r.s_linear = true;
            r.cheb = scalar_of(a) * b.cheb;
        } else if (b.scalar && a.s_linear) {
            r.s_linear = true;
            r.cheb = scalar_of(b) * a.cheb;
        } else {
            r.s_linear = false;
        }
        return r;
    }

    static LaurentPoly scalar_of(const PValue& v) { return v.mono.coeff(0); }

    PValue parse_expr() {
        bool negate = false;
        if (lex_.peek().kind == Token::Kind::Plus) lex_.next();
        else if (lex_.peek().kind == Token::Kind::Minus) { lex_.next(); negate = true; }
        PValue acc = parse_term();
        if (negate) acc = add(PValue{}, acc, true);
        while (true) {
            const Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::Plus) { lex_.next(); acc = add(acc, parse_term(), false); }
            else if (k == Token::Kind::Minus) { lex_.next(); acc = add(acc, parse_term(), true); }
            else break;
        }
        return acc;
    }

    PValue parse_term() {
        PValue acc = parse_primary();
        while (true) {
            const Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::Star) {
                lex_.next();
                acc = mul(acc, parse_primary());
            } else if (k == Token::Kind::Int || k == Token::Kind::VarA || k == Token::Kind::VarT ||
                       k == Token::Kind::ChebS || k == Token::Kind::LParen) {
                acc = mul(acc, parse_primary());  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    PValue parse_primary() {
        const Token t = lex_.next();
        switch (t.kind) {
            case Token::Kind::Minus: return add(PValue{}, parse_primary(), true);
            case Token::Kind::Plus: return parse_primary();
            case Token::Kind::Int: return PValue::from_scalar(LaurentPoly(t.value));
            case Token::Kind::VarA:
                return PValue::from_scalar(LaurentPoly::monomial(1, parse_exponent(true)));
            case Token::Kind::VarT: {
                const Exp e = parse_exponent(false);
                PValue v;
                v.mono = TPoly::term(LaurentPoly(1), static_cast<unsigned>(e), Basis::Monomial);
                v.scalar = false;
                v.s_linear = false;
                return v;
            }
            case Token::Kind::ChebS: {
                saw_s_ = true;
                const unsigned n = static_cast<unsigned>(t.value);
                PValue v;
                v.mono = chebyshev_S(n);
                v.cheb = TPoly::term(LaurentPoly(1), n, Basis::Chebyshev);
                v.scalar = false;
                return v;
            }
            case Token::Kind::LParen: {
                PValue v = parse_expr();
                const Token close = lex_.next();
                if (close.kind != Token::Kind::RParen) throw parse_error(close.col, "expected ')'");
                return v;
            }
            default:
                throw parse_error(t.col, "expected a value");
        }
    }

    // exponent after a variable; defaults to 1 when no '^' follows
    Exp parse_exponent(bool allow_negative) {
        if (lex_.peek().kind != Token::Kind::Caret) return 1;
        lex_.next();
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            if (!allow_negative) throw parse_error(lex_.peek().col, "negative t exponent");
            lex_.next();
            neg = true;
        } else if (lex_.peek().kind == Token::Kind::Plus) {
            lex_.next();
        }
        const Token t = lex_.next();
        if (t.kind != Token::Kind::Int) throw parse_error(t.col, "expected exponent");
        const Exp e = static_cast<Exp>(t.value);
        return neg ? -e : e;
    }

    Lexer lex_;
    bool saw_s_ = false;
};

}  // namespace detail

inline TPoly parse_tpoly(const std::string& text) { return detail::Parser(text).parse(); }

// parses an expression that must be a plain element of Z[A^(+/-1)]
inline LaurentPoly parse_laurent(const std::string& text) {
    const TPoly p = parse_tpoly(text);
    if (p.is_zero()) return LaurentPoly();
    if (p.basis() != Basis::Monomial || p.degree() != 0)
        throw parse_error(1, "expected a Laurent polynomial in A only");
    return p.coeff(0);
}

}  // namespace skein
