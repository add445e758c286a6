/*
   Copyright 2026 The ufspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ufspec/expr.hpp"

#include <cctype>

#include "ufspec/errors.hpp"

namespace ufspec {

ExprPtr Expr::int_lit(Int v) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::IntLit;
    e->value_ = std::move(v);
    return e;
}

ExprPtr Expr::ident(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::Ident;
    e->name_ = std::move(name);
    return e;
}

ExprPtr Expr::add(ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::Add;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return e;
}

ExprPtr Expr::sub(ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::Sub;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return e;
}

ExprPtr Expr::mul(ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::Mul;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return e;
}

ExprPtr Expr::pow(ExprPtr base, unsigned exponent) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::Pow;
    e->lhs_ = std::move(base);
    e->exponent_ = exponent;
    return e;
}

std::vector<std::string> Expr::identifiers() const {
    std::vector<std::string> out;
    auto walk = [&out](const Expr& node, auto&& self) -> void {
        switch (node.kind_) {
            case Kind::Ident:
                if (std::find(out.begin(), out.end(), node.name_) == out.end())
                    out.push_back(node.name_);
                return;
            case Kind::IntLit:
                return;
            case Kind::Pow:
                self(*node.lhs_, self);
                return;
            default:
                self(*node.lhs_, self);
                self(*node.rhs_, self);
        }
    };
    walk(*this, walk);
    return out;
}

// ------------------------------------------------------------------ parser

namespace {

struct Token {
    enum class Type { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Type type;
    std::size_t pos;
    Int value;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Token::Type::End, start, 0, ""};
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return {Token::Type::Int, start, Int(digits), digits};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            return {Token::Type::Ident, start, 0, name};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Type::Plus, start, 0, "+"};
            case '-': return {Token::Type::Minus, start, 0, "-"};
            case '*': return {Token::Type::Star, start, 0, "*"};
            case '^': return {Token::Type::Caret, start, 0, "^"};
            case '(': return {Token::Type::LParen, start, 0, "("};
            case ')': return {Token::Type::RParen, start, 0, ")"};
        }
        throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    ExprPtr parse() {
        ExprPtr e = expr();
        if (cur_.type != Token::Type::End) {
            if (cur_.type == Token::Type::Int || cur_.type == Token::Type::Ident ||
                cur_.type == Token::Type::LParen)
                throw SyntaxError(cur_.pos, "implicit multiplication is not allowed before '" +
                                                cur_.text + "'");
            throw SyntaxError(cur_.pos, "unexpected '" + cur_.text + "'");
        }
        return e;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    ExprPtr expr() {
        ExprPtr e = term();
        while (cur_.type == Token::Type::Plus || cur_.type == Token::Type::Minus) {
            const bool plus = cur_.type == Token::Type::Plus;
            advance();
            ExprPtr rhs = term();
            e = plus ? Expr::add(std::move(e), std::move(rhs))
                     : Expr::sub(std::move(e), std::move(rhs));
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (cur_.type == Token::Type::Star) {
            advance();
            e = Expr::mul(std::move(e), factor());
        }
        return e;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (cur_.type != Token::Type::Caret) return base;
        advance();
        if (cur_.type != Token::Type::Int)
            throw SyntaxError(cur_.pos, "'^' requires a non-negative integer exponent");
        if (cur_.value > 1000000)
            throw SyntaxError(cur_.pos, "exponent too large");
        unsigned exponent = cur_.value.convert_to<unsigned>();
        advance();
        return Expr::pow(std::move(base), exponent);
    }

    ExprPtr atom() {
        switch (cur_.type) {
            case Token::Type::Int: {
                ExprPtr e = Expr::int_lit(cur_.value);
                advance();
                return e;
            }
            case Token::Type::Ident: {
                ExprPtr e = Expr::ident(cur_.text);
                advance();
                return e;
            }
            case Token::Type::LParen: {
                advance();
                ExprPtr e = expr();
                if (cur_.type != Token::Type::RParen)
                    throw SyntaxError(cur_.pos, "expected ')'");
                advance();
                return e;
            }
            case Token::Type::End:
                throw SyntaxError(cur_.pos, "unexpected end of input");
            default:
                throw SyntaxError(cur_.pos, "unexpected '" + cur_.text + "'");
        }
    }

    Lexer lexer_;
    Token cur_{Token::Type::End, 0, 0, ""};
};

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::IntLit:
        case Expr::Kind::Ident: return 4;
        case Expr::Kind::Pow: return 3;
        case Expr::Kind::Mul: return 2;
        default: return 1;
    }
}

void print(const ExprPtr& e, std::string& out) {
    switch (e->kind()) {
        case Expr::Kind::IntLit:
            out += e->value().str();
            return;
        case Expr::Kind::Ident:
            out += e->name();
            return;
        case Expr::Kind::Pow: {
            const bool parens = precedence(e->lhs()->kind()) < 4;
            if (parens) out += "(";
            print(e->lhs(), out);
            if (parens) out += ")";
            out += "^" + std::to_string(e->exponent());
            return;
        }
        case Expr::Kind::Mul: {
            auto operand = [&out](const ExprPtr& o) {
                const bool parens = precedence(o->kind()) < 2;
                if (parens) out += "(";
                print(o, out);
                if (parens) out += ")";
            };
            operand(e->lhs());
            out += " * ";
            operand(e->rhs());
            return;
        }
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            print(e->lhs(), out);
            out += e->kind() == Expr::Kind::Add ? " + " : " - ";
            const bool parens = precedence(e->rhs()->kind()) < 2;
            if (parens) out += "(";
            print(e->rhs(), out);
            if (parens) out += ")";
            return;
        }
    }
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const ExprPtr& expr) {
    std::string out;
    print(expr, out);
    return out;
}

// ------------------------------------------------- univariate evaluation

namespace {

using Dense = std::vector<Int>;

Dense trim(Dense v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

Dense dense_add(const Dense& a, const Dense& b, bool subtract) {
    Dense r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int av = i < a.size() ? a[i] : Int(0);
        Int bv = i < b.size() ? b[i] : Int(0);
        r[i] = subtract ? Int(av - bv) : Int(av + bv);
    }
    return trim(std::move(r));
}

Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

Dense eval_dense(const ExprPtr& e) {
    switch (e->kind()) {
        case Expr::Kind::IntLit:
            return e->value() == 0 ? Dense{} : Dense{e->value()};
        case Expr::Kind::Ident:
            if (e->name() != "x")
                throw UnknownIdentifier("unknown identifier '" + e->name() +
                                        "' (only 'x' is allowed here)");
            return {0, 1};
        case Expr::Kind::Add:
            return dense_add(eval_dense(e->lhs()), eval_dense(e->rhs()), false);
        case Expr::Kind::Sub:
            return dense_add(eval_dense(e->lhs()), eval_dense(e->rhs()), true);
        case Expr::Kind::Mul:
            return dense_mul(eval_dense(e->lhs()), eval_dense(e->rhs()));
        case Expr::Kind::Pow: {
            Dense base = eval_dense(e->lhs());
            Dense acc = {1};
            for (unsigned i = 0; i < e->exponent(); ++i) acc = dense_mul(acc, base);
            return acc;
        }
    }
    throw InputError("unreachable");
}

}  // namespace

std::vector<Int> eval_univariate(const ExprPtr& expr) { return eval_dense(expr); }

}  // namespace ufspec
