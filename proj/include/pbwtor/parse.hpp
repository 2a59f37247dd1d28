#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "pbwtor/algebra.hpp"

namespace pbwtor {

/// Expression tree for polynomial input. Products keep their written order,
/// so evaluation over a PBW algebra exercises the rewriting engine.
struct Expr {
    enum class Kind { Number, Variable, Add, Sub, Neg, Mul, Pow };
    Kind kind = Kind::Number;
    Rational value;
    int var = -1;
    int exponent = 0;
    int line = 1;
    int col = 1;
    std::vector<Expr> kids;
};

namespace detail {

struct Token {
    enum class Kind { Integer, Ident, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    Lexer(const std::string& text, int line0, int col0)
        : text_(text), line_(line0), col_(col0) {}

    Token next() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            advance();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= text_.size()) return t;
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Integer;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                t.text += text_[pos_];
                advance();
            }
            return t;
        }
        t.kind = Token::Kind::Symbol;
        t.text = std::string(1, c);
        advance();
        return t;
    }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_;
    int col_;
};

class ExprParser {
  public:
    ExprParser(const std::string& text, const std::vector<std::string>& names, int line0, int col0)
        : lex_(text, line0, col0), names_(names) {
        cur_ = lex_.next();
    }

    Expr parse_full() {
        Expr e = parse_sum();
        expect_end();
        return e;
    }

    /// "( expr , expr , ... )"
    std::vector<Expr> parse_tuple() {
        expect_symbol("(");
        std::vector<Expr> out;
        out.push_back(parse_sum());
        while (is_symbol(",")) {
            take();
            out.push_back(parse_sum());
        }
        expect_symbol(")");
        expect_end();
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.line, cur_.col); }

    void take() { cur_ = lex_.next(); }

    bool is_symbol(const std::string& s) const {
        return cur_.kind == Token::Kind::Symbol && cur_.text == s;
    }

    void expect_symbol(const std::string& s) {
        if (!is_symbol(s)) fail("expected '" + s + "'");
        take();
    }

    void expect_end() {
        if (cur_.kind != Token::Kind::End) fail("unexpected trailing input '" + cur_.text + "'");
    }

    Expr parse_sum() {
        Expr e = parse_product();
        while (is_symbol("+") || is_symbol("-")) {
            bool plus = cur_.text == "+";
            Expr r;
            r.kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
            r.line = cur_.line;
            r.col = cur_.col;
            take();
            r.kids.push_back(std::move(e));
            r.kids.push_back(parse_product());
            e = std::move(r);
        }
        return e;
    }

    Expr parse_product() {
        Expr e = parse_factor();
        while (is_symbol("*")) {
            Expr r;
            r.kind = Expr::Kind::Mul;
            r.line = cur_.line;
            r.col = cur_.col;
            take();
            r.kids.push_back(std::move(e));
            r.kids.push_back(parse_factor());
            e = std::move(r);
        }
        return e;
    }

    Expr parse_factor() {
        if (is_symbol("-")) {
            Expr r;
            r.kind = Expr::Kind::Neg;
            r.line = cur_.line;
            r.col = cur_.col;
            take();
            r.kids.push_back(parse_factor());
            return r;
        }
        Expr e = parse_atom();
        while (is_symbol("^")) {
            Expr r;
            r.kind = Expr::Kind::Pow;
            r.line = cur_.line;
            r.col = cur_.col;
            take();
            if (cur_.kind != Token::Kind::Integer) fail("exponent must be a non-negative integer");
            r.exponent = std::stoi(cur_.text);
            take();
            r.kids.push_back(std::move(e));
            e = std::move(r);
        }
        return e;
    }

    Expr parse_atom() {
        if (is_symbol("(")) {
            take();
            Expr e = parse_sum();
            expect_symbol(")");
            return e;
        }
        Expr e;
        e.line = cur_.line;
        e.col = cur_.col;
        if (cur_.kind == Token::Kind::Integer) {
            Integer num(cur_.text);
            take();
            if (is_symbol("/")) {
                take();
                if (cur_.kind != Token::Kind::Integer) fail("expected denominator");
                Integer den(cur_.text);
                if (den == 0) fail("zero denominator");
                take();
                e.value = Rational(num, den);
            } else {
                e.value = Rational(num);
            }
            e.kind = Expr::Kind::Number;
            return e;
        }
        if (cur_.kind == Token::Kind::Ident) {
            for (size_t v = 0; v < names_.size(); ++v) {
                if (names_[v] == cur_.text) {
                    e.kind = Expr::Kind::Variable;
                    e.var = static_cast<int>(v);
                    take();
                    return e;
                }
            }
            fail("unknown variable '" + cur_.text + "'");
        }
        fail(cur_.kind == Token::Kind::End ? "unexpected end of expression"
                                           : "unexpected token '" + cur_.text + "'");
    }

    Lexer lex_;
    Token cur_;
    const std::vector<std::string>& names_;
};

}  // namespace detail

/// line0/col0 locate the expression inside a larger file for diagnostics.
inline Expr parse_expression_tree(const std::string& text, const std::vector<std::string>& names,
                                  int line0 = 1, int col0 = 1) {
    detail::ExprParser p(text, names, line0, col0);
    return p.parse_full();
}

inline std::vector<Expr> parse_tuple_tree(const std::string& text,
                                          const std::vector<std::string>& names, int line0 = 1,
                                          int col0 = 1) {
    detail::ExprParser p(text, names, line0, col0);
    return p.parse_tuple();
}

template <class Alg>
Polynomial eval_expr(const Alg& A, const Expr& e) {
    int n = A.nvars();
    switch (e.kind) {
        case Expr::Kind::Number:
            return Polynomial::constant(e.value, n);
        case Expr::Kind::Variable:
            return Polynomial::monomial(1, Monomial::var(e.var, n));
        case Expr::Kind::Add:
            return add(eval_expr(A, e.kids[0]), eval_expr(A, e.kids[1]), A.order);
        case Expr::Kind::Sub:
            return sub(eval_expr(A, e.kids[0]), eval_expr(A, e.kids[1]), A.order);
        case Expr::Kind::Neg:
            return negate(eval_expr(A, e.kids[0]));
        case Expr::Kind::Mul:
            return multiply(A, eval_expr(A, e.kids[0]), eval_expr(A, e.kids[1]));
        case Expr::Kind::Pow: {
            Polynomial base = eval_expr(A, e.kids[0]);
            Polynomial out = Polynomial::constant(1, n);
            for (int i = 0; i < e.exponent; ++i) out = multiply(A, out, base);
            return out;
        }
    }
    throw Error("unhandled expression node");
}

/// Parses and normalizes an expression over a finished algebra.
inline Polynomial parse_expression(const AlgebraSpec& A, const std::string& text, int line0 = 1,
                                   int col0 = 1) {
    return eval_expr(A, parse_expression_tree(text, A.names, line0, col0));
}

}  // namespace pbwtor
