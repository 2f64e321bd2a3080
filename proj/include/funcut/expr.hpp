#pragma once

// Expression language for functions of one variable x.
//
//   expr    := term { ("+" | "-") term }
//   term    := unary { ("*" | ".*" | "/" | "./") unary }
//   unary   := ("-" | "+") unary | power
//   power   := primary [ ("^" | ".^") unary ]          right-associative
//   primary := number [ "i" ] | "i" | "x" | "pi"
//            | name "(" expr ")" | "(" expr ")"
//   name    := exp | sin | cos | tan | log | sqrt | abs
//            | sinh | cosh | tanh | acos | asin | atan
//   number  := digits [ "." [ digits ] ] [ exponent ] | "." digits [ exponent ]
//
// A number directly followed by "i" is an imaginary literal (".03i" is
// 0.03 * i). A "." that starts ".*", "./" or ".^" is never part of a number.
// Evaluation is complex throughout; subexpressions with real operands stay
// exactly real (imaginary part +0).

#include <complex>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace funcut::expr {

using Complex = std::complex<double>;

enum class Func { Exp, Sin, Cos, Tan, Log, Sqrt, Abs, Sinh, Cosh, Tanh, Acos, Asin, Atan };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
    double value;
};
struct ImaginaryUnit {};
struct Variable {};
struct Negate {
    NodePtr operand;
};
struct Binary {
    BinaryOp op;
    NodePtr lhs, rhs;
};
struct Call {
    Func func;
    NodePtr arg;
};

struct Node {
    std::variant<Number, ImaginaryUnit, Variable, Negate, Binary, Call> kind;
};

/// Immutable expression tree.
class Ast {
public:
    explicit Ast(NodePtr root) : root_(std::move(root)) {}
    const Node &root() const noexcept { return *root_; }
    const NodePtr &root_ptr() const noexcept { return root_; }

private:
    NodePtr root_;
};

/// Parse failure with a 1-based column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string &what);
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

Ast parse(std::string_view src);

Complex eval_ast(const Ast &ast, Complex x);
Complex eval_node(const Node &node, Complex x);

/// Fully parenthesized source text that parses back to the same tree.
std::string print(const Ast &ast);

/// Structural equality (numbers compared bitwise).
bool structurally_equal(const Node &a, const Node &b);

std::string_view func_name(Func f);

/// Apply a whitelisted function with the real-stays-real rule.
Complex apply(Func f, Complex z);

/// Apply a binary operator with the real-stays-real rule.
Complex apply(BinaryOp op, Complex a, Complex b);

} // namespace funcut::expr
