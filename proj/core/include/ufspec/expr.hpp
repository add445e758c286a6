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

#ifndef UFSPEC_EXPR_HPP
#define UFSPEC_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ufspec/integer.hpp"

namespace ufspec {

/// Polynomial expression tree over the grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := int | ident | '(' expr ')'
///
/// Implicit multiplication is rejected; '^' takes a non-negative integer
/// exponent.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind { IntLit, Ident, Add, Sub, Mul, Pow };

    static ExprPtr int_lit(Int v);
    static ExprPtr ident(std::string name);
    static ExprPtr add(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr sub(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr mul(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr pow(ExprPtr base, unsigned exponent);

    Kind kind() const { return kind_; }
    const Int& value() const { return value_; }
    const std::string& name() const { return name_; }
    const ExprPtr& lhs() const { return lhs_; }
    const ExprPtr& rhs() const { return rhs_; }
    unsigned exponent() const { return exponent_; }

    /// Identifiers referenced anywhere in the tree, in first-use order.
    std::vector<std::string> identifiers() const;

private:
    Kind kind_ = Kind::IntLit;
    Int value_;
    std::string name_;
    ExprPtr lhs_, rhs_;
    unsigned exponent_ = 0;
};

/// Parses the grammar above; throws SyntaxError with a 0-based position.
ExprPtr parse_expression(std::string_view text);

/// Canonical rendering with minimal parentheses. parse . to_string is the
/// identity on parsed trees, which makes pretty-printing idempotent.
std::string to_string(const ExprPtr& expr);

/// Evaluates an expression in Z[x] to dense monomial coefficients (low
/// degree first). The only identifier allowed is `x`; anything else
/// raises UnknownIdentifier.
std::vector<Int> eval_univariate(const ExprPtr& expr);

}  // namespace ufspec

#endif
