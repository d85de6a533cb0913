#ifndef SURFKIN_PROFILE_EXPR_HPP
#define SURFKIN_PROFILE_EXPR_HPP

#include <memory>
#include <string>

#include "surfkin/dual2.hpp"
#include "surfkin/errors.hpp"

namespace surfkin {

// Differentiable expression in the single variable z.  Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := unary ('^' factor)?            // right-associative
//   unary  := '-' unary | primary
//   primary:= number | 'z' | ident '(' expr ')' | '(' expr ')'
// with ident in {sin, cos, sinh, cosh, exp, log, sqrt}.
class ProfileExpr {
public:
    struct Node;
    using NodePtr = std::unique_ptr<Node>;

    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call };

    struct Node {
        Kind kind;
        double value = 0.0;   // Number
        std::string fn;       // Call
        NodePtr lhs, rhs;     // Neg/Call use lhs only
    };

    // Evaluates value, d/dz, d²/dz² at z.  Throws NumericalError on domain
    // violations (log of a non-positive value, sqrt of a negative, 0^neg).
    Dual2 eval(double z) const;

    // Canonical fully-parenthesised rendering; reparsing it yields an
    // identical tree.
    std::string pretty() const;

    const Node& root() const { return *root_; }

    friend ProfileExpr parse_profile(const std::string& text);
    friend bool same_ast(const ProfileExpr& a, const ProfileExpr& b);

private:
    NodePtr root_;
};

// Throws ParseError (with byte offset into `text`) on malformed input.
ProfileExpr parse_profile(const std::string& text);

// Structural equality of the parsed trees.
bool same_ast(const ProfileExpr& a, const ProfileExpr& b);

} // namespace surfkin

#endif
