#include "uqaw/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <map>

namespace uqaw {

namespace {

// UTF-8 spellings of the Greek parameter and generator names we accept on
// input; output is always ASCII.
const std::map<std::string, std::string>& unicode_names() {
    static const std::map<std::string, std::string> m = {
        {"α", "alpha"}, {"β", "beta"}, {"γ", "gamma"},
        {"κ", "kappa"}, {"λ", "lambda"}, {"μ", "mu"},
        {"ν", "nu"},
    };
    return m;
}

struct Token {
    enum class Kind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) return {Token::Kind::End, ""};
        char c = s_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Kind::Plus, "+"};
            case '-': ++pos_; return {Token::Kind::Minus, "-"};
            case '*': ++pos_; return {Token::Kind::Star, "*"};
            case '/': ++pos_; return {Token::Kind::Slash, "/"};
            case '^': ++pos_; return {Token::Kind::Caret, "^"};
            case '(': ++pos_; return {Token::Kind::LParen, "("};
            case ')': ++pos_; return {Token::Kind::RParen, ")"};
            case '{': ++pos_; return {Token::Kind::LParen, "("};
            case '}': ++pos_; return {Token::Kind::RParen, ")"};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Token::Kind::Integer, s_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {Token::Kind::Ident, s_.substr(start, pos_ - start)};
        }
        // Multi-byte UTF-8 identifier character: consume one code point.
        if (static_cast<unsigned char>(c) >= 0x80) {
            size_t len = 1;
            unsigned char uc = static_cast<unsigned char>(c);
            if ((uc & 0xE0) == 0xC0) len = 2;
            else if ((uc & 0xF0) == 0xE0) len = 3;
            else if ((uc & 0xF8) == 0xF0) len = 4;
            std::string cp = s_.substr(pos_, len);
            auto it = unicode_names().find(cp);
            if (it == unicode_names().end())
                throw malformed_expression("unexpected character in expression: " + cp);
            pos_ += len;
            return {Token::Kind::Ident, it->second};
        }
        throw malformed_expression(std::string("unexpected character in expression: ") + c);
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { advance(); }

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        expect(Token::Kind::End, "trailing input after expression");
        return e;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    void expect(Token::Kind kind, const char* message) {
        if (tok_.kind != kind) throw malformed_expression(message);
    }

    static ExprPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    ExprPtr parse_sum() {
        ExprPtr left = parse_term();
        while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
            bool minus = tok_.kind == Token::Kind::Minus;
            advance();
            ExprPtr right = parse_term();
            ExprNode n;
            n.kind = minus ? ExprNode::Kind::Difference : ExprNode::Kind::Sum;
            n.children = {left, right};
            left = make(std::move(n));
        }
        return left;
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_unary();
        while (tok_.kind == Token::Kind::Star || tok_.kind == Token::Kind::Slash) {
            bool divide = tok_.kind == Token::Kind::Slash;
            advance();
            ExprPtr right = parse_unary();
            ExprNode n;
            n.kind = divide ? ExprNode::Kind::Quotient : ExprNode::Kind::Product;
            n.children = {left, right};
            left = make(std::move(n));
        }
        return left;
    }

    ExprPtr parse_unary() {
        if (tok_.kind == Token::Kind::Minus) {
            advance();
            ExprNode n;
            n.kind = ExprNode::Kind::Negate;
            n.children = {parse_unary()};
            return make(std::move(n));
        }
        if (tok_.kind == Token::Kind::Plus) {
            advance();
            return parse_unary();
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        while (tok_.kind == Token::Kind::Caret) {
            advance();
            long sign = 1;
            if (tok_.kind == Token::Kind::Minus) {
                sign = -1;
                advance();
            }
            // Exponents may be written as 2, -2, (2), (-2), {-2}.
            bool parenthesized = false;
            if (tok_.kind == Token::Kind::LParen) {
                parenthesized = true;
                advance();
                if (tok_.kind == Token::Kind::Minus) {
                    sign = -sign;
                    advance();
                }
            }
            expect(Token::Kind::Integer, "integer exponent expected after ^");
            long e = std::strtol(tok_.text.c_str(), nullptr, 10);
            advance();
            if (parenthesized) {
                expect(Token::Kind::RParen, "unbalanced exponent parentheses");
                advance();
            }
            ExprNode n;
            n.kind = ExprNode::Kind::Power;
            n.exponent = sign * e;
            n.children = {base};
            base = make(std::move(n));
        }
        return base;
    }

    ExprPtr parse_atom() {
        if (tok_.kind == Token::Kind::Integer) {
            ExprNode n;
            n.kind = ExprNode::Kind::Integer;
            n.value = mpz_class(tok_.text);
            advance();
            return make(std::move(n));
        }
        if (tok_.kind == Token::Kind::Ident) {
            ExprNode n;
            n.kind = ExprNode::Kind::Symbol;
            n.name = tok_.text;
            advance();
            return make(std::move(n));
        }
        if (tok_.kind == Token::Kind::LParen) {
            advance();
            ExprPtr e = parse_sum();
            expect(Token::Kind::RParen, "unbalanced parentheses");
            advance();
            return e;
        }
        throw malformed_expression("unexpected token: '" + tok_.text + "'");
    }

    Lexer lexer_;
    Token tok_;
};

Scalar eval_scalar_node(const ExprPtr& e) {
    switch (e->kind) {
        case ExprNode::Kind::Integer:
            return Scalar::integer(e->value);
        case ExprNode::Kind::Symbol:
            if (!ParamSet::global().index_of(e->name))
                throw unknown_parameter("UnknownParameter: " + e->name);
            return Scalar::variable(e->name);
        case ExprNode::Kind::Sum:
            return eval_scalar_node(e->children[0]) + eval_scalar_node(e->children[1]);
        case ExprNode::Kind::Difference:
            return eval_scalar_node(e->children[0]) - eval_scalar_node(e->children[1]);
        case ExprNode::Kind::Product:
            return eval_scalar_node(e->children[0]) * eval_scalar_node(e->children[1]);
        case ExprNode::Kind::Quotient: {
            Scalar d = eval_scalar_node(e->children[1]);
            if (d.is_zero()) throw division_by_zero();
            return eval_scalar_node(e->children[0]) / d;
        }
        case ExprNode::Kind::Power:
            return eval_scalar_node(e->children[0]).pow(e->exponent);
        case ExprNode::Kind::Negate:
            return -eval_scalar_node(e->children[0]);
    }
    throw malformed_expression("unreachable expression node");
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

Scalar eval_scalar_expression(const ExprPtr& expr) { return eval_scalar_node(expr); }

Scalar Scalar::parse(const std::string& text) {
    return eval_scalar_expression(parse_expression(text));
}

long default_word_cap() {
    if (const char* env = std::getenv("UQAW_MAX_WORD_LEN")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return v;
    }
    return 64;
}

}  // namespace uqaw
