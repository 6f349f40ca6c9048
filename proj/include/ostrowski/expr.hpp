#pragma once

// Expression front-end for real functions of one variable `t`.
//
// Grammar (whitespace is ignored):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative, binds tighter than unary minus
//   primary := number | 't' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'
//   name    := sin | cos | exp | ln | abs | sqrt
//
// So `-t^2` is `-(t^2)`, `2^3^2` is `2^(3^2)` and `t^-1` is `t^(-1)`.

#include <memory>
#include <string>
#include <string_view>

namespace ostrowski {

enum class Op {
    Constant,
    Variable,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Neg,
    Sin,
    Cos,
    Exp,
    Ln,
    Abs,
    Sqrt,
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Op op = Op::Constant;
    double value = 0.0;  // Constant only
    NodePtr lhs;         // operand of unary ops, left operand of binary ops
    NodePtr rhs;         // right operand of binary ops
};

/// Value and first derivative with respect to `t` at one point.
struct DualValue {
    double value = 0.0;
    double deriv = 0.0;
};

/// An immutable parsed function. Cheap to copy; safe to evaluate from several threads.
class FunctionSpec {
public:
    /// The identity function `t`.
    FunctionSpec();

    static FunctionSpec parse(std::string_view text);
    static FunctionSpec from_node(NodePtr root);

    /// Throws DomainError outside the domain of any subexpression.
    double eval(double t) const;
    double operator()(double t) const { return eval(t); }

    /// Forward-mode value and derivative. Throws NondifferentiableError where
    /// the derivative does not exist and DomainError as eval().
    DualValue eval_dual(double t) const;
    double derivative(double t) const { return eval_dual(t).deriv; }

    /// Fully parenthesised text with 17-significant-digit literals.
    std::string serialize() const;

    const std::string& source_text() const noexcept { return source_text_; }
    const Node& root() const noexcept { return *root_; }

private:
    FunctionSpec(NodePtr root, std::string source);

    NodePtr root_;
    std::string source_text_;
};

inline FunctionSpec parse(std::string_view text) { return FunctionSpec::parse(text); }
inline double eval(const FunctionSpec& f, double t) { return f.eval(t); }
inline DualValue eval_dual(const FunctionSpec& f, double t) { return f.eval_dual(t); }

std::string serialize(const Node& node);

}  // namespace ostrowski
