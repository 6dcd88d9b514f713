#pragma once

#include "leibniz/polynomial.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

/** Syntax or representability error, carrying a 1-based character position. */
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos; // 1-based offset of the first character
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token eat() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t' || src_[i_] == '\n' || src_[i_] == '\r'))
            ++i_;
        std::size_t pos = i_ + 1;
        if (i_ >= src_.size()) {
            tok_ = {Tok::end, "", pos};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Tok::number, std::string(src_.substr(i_, j - i_)), pos};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = {Tok::ident, std::string(src_.substr(i_, j - i_)), pos};
            i_ = j;
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            default:
                throw ParseError(pos, std::string("unexpected character '") + c + "'");
        }
        tok_ = {k, std::string(1, c), pos};
        ++i_;
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(std::string_view src, const std::vector<std::string>& vars, const Field& field)
        : lex_(src), vars_(vars), field_(field) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == "sqrt") throw std::invalid_argument("parse_poly: 'sqrt' is reserved");
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw std::invalid_argument("parse_poly: duplicate variable name");
        }
    }

    Polynomial run() {
        Polynomial p = expr();
        if (lex_.peek().kind != Tok::end)
            throw ParseError(lex_.peek().pos, "trailing input");
        return p;
    }

private:
    // expr := ['-'] term (('+'|'-') term)*
    Polynomial expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::minus) {
            lex_.eat();
            negate = true;
        }
        Polynomial p = term();
        if (negate) p = -p;
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            bool minus = lex_.eat().kind == Tok::minus;
            Polynomial t = term();
            p = minus ? p - t : p + t;
        }
        return p;
    }

    // term := factor ('*' factor)*
    Polynomial term() {
        Polynomial p = factor();
        while (lex_.peek().kind == Tok::star) {
            lex_.eat();
            p *= factor();
        }
        return p;
    }

    // factor := base ('^' nat)?
    Polynomial factor() {
        Polynomial p = base();
        if (lex_.peek().kind == Tok::caret) {
            lex_.eat();
            Token t = expect(Tok::number, "exponent");
            unsigned long e = 0;
            try {
                e = std::stoul(t.text);
            } catch (const std::exception&) {
                throw ParseError(t.pos, "exponent too large");
            }
            if (e > 65535) throw ParseError(t.pos, "exponent too large");
            p = p.pow(static_cast<std::uint32_t>(e));
        }
        return p;
    }

    // base := var | literal | '(' expr ')'
    Polynomial base() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::lparen: {
                lex_.eat();
                Polynomial p = expr();
                expect(Tok::rparen, "')'");
                return p;
            }
            case Tok::number:
                return literal();
            case Tok::ident: {
                if (t.text == "sqrt") return sqrt_literal();
                Token v = lex_.eat();
                for (std::size_t i = 0; i < vars_.size(); ++i)
                    if (vars_[i] == v.text)
                        return Polynomial::variable(field_, vars_.size(), i);
                throw ParseError(v.pos, "unknown variable '" + v.text + "'");
            }
            default:
                throw ParseError(t.pos, "expected a variable, literal, or '('");
        }
    }

    // literal := int | int '/' int
    Polynomial literal() {
        Token num = expect(Tok::number, "number");
        Int n(num.text);
        if (lex_.peek().kind == Tok::slash) {
            lex_.eat();
            Token den = expect(Tok::number, "denominator");
            Int d(den.text);
            if (d == 0) throw ParseError(den.pos, "zero denominator");
            return Polynomial::constant(field_, vars_.size(), Scalar(Rat(n, d)));
        }
        return Polynomial::constant(field_, vars_.size(), Scalar(n));
    }

    // literal := 'sqrt(' nat ')'
    Polynomial sqrt_literal() {
        Token kw = expect(Tok::ident, "sqrt");
        expect(Tok::lparen, "'(' after sqrt");
        Token num = expect(Tok::number, "radicand");
        expect(Tok::rparen, "')'");
        unsigned long d = 0;
        try {
            d = std::stoul(num.text);
        } catch (const std::exception&) {
            throw ParseError(num.pos, "radicand too large");
        }
        if (field_.kind() != FieldKind::quadratic || field_.d() != d)
            throw ParseError(kw.pos, "coefficient not representable in the field " + field_.name());
        return Polynomial::constant(field_, vars_.size(), Scalar::sqrt_of(field_.d()));
    }

    Token expect(Tok kind, const char* what) {
        if (lex_.peek().kind != kind)
            throw ParseError(lex_.peek().pos, std::string("expected ") + what);
        return lex_.eat();
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
    Field field_;
};

inline std::string rat_plain(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

/** Renders a lex-positive scalar as a parseable factor. */
inline std::string scalar_factor(const Scalar& c) {
    if (c.is_rational()) {
        if (rat_den(c.a()) == 1) return rat_num(c.a()).str();
        return "(" + rat_plain(c.a()) + ")";
    }
    std::string root = "sqrt(" + std::to_string(c.d()) + ")";
    auto b_part = [&](const Rat& b) {
        if (b == 1) return root;
        if (rat_den(b) == 1) return rat_num(b).str() + "*" + root;
        return "(" + rat_plain(b) + ")*" + root;
    };
    if (c.a() == 0) return b_part(c.b());
    bool neg_b = c.b() < 0;
    return "(" + rat_plain(c.a()) + (neg_b ? " - " : " + ") + b_part(neg_b ? -c.b() : c.b()) + ")";
}

inline std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

} // namespace detail

/**
 * Parses the expression grammar
 *   expr := ['-'] term (('+'|'-') term)*
 *   term := factor ('*' factor)*
 *   factor := base ('^' nat)?
 *   base := var | literal | '(' expr ')'
 *   literal := int | int '/' int | 'sqrt(' nat ')'
 * over the named variables. sqrt(d) is admitted only when field = Q(sqrt(d)).
 */
inline Polynomial parse_poly(std::string_view text, const std::vector<std::string>& vars, const Field& field) {
    return detail::Parser(text, vars, field).run();
}

/** Canonical graded-lex rendering; parse_poly(format_poly(p)) == p. */
inline std::string format_poly(const Polynomial& p, const std::vector<std::string>& vars) {
    if (vars.size() != p.nvars())
        throw std::invalid_argument("format_poly: variable name count mismatch");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = c.lex_negative();
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Scalar mag = neg ? -c : c;
        std::string mono = detail::monomial_string(m, vars);
        if (mono.empty()) {
            out += detail::scalar_factor(mag);
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += detail::scalar_factor(mag) + "*" + mono;
        }
    }
    return out;
}

/** Default variable names: "x" alone, otherwise x1, x2, ... */
inline std::vector<std::string> default_var_names(std::size_t nvars) {
    if (nvars == 1) return {"x"};
    std::vector<std::string> v;
    v.reserve(nvars);
    for (std::size_t i = 1; i <= nvars; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

} // namespace leibniz
