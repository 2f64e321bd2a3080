#include "funcut/expr.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <charconv>
#include <cmath>
#include <numbers>

namespace funcut::expr {

namespace {

constexpr std::size_t kMaxDepth = 200;

struct FuncEntry {
    std::string_view name;
    Func func;
};

constexpr std::array<FuncEntry, 13> kFunctions{{
    {"exp", Func::Exp},
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"tan", Func::Tan},
    {"log", Func::Log},
    {"sqrt", Func::Sqrt},
    {"abs", Func::Abs},
    {"sinh", Func::Sinh},
    {"cosh", Func::Cosh},
    {"tanh", Func::Tanh},
    {"acos", Func::Acos},
    {"asin", Func::Asin},
    {"atan", Func::Atan},
}};

NodePtr make(auto &&kind) { return std::make_shared<const Node>(Node{std::forward<decltype(kind)>(kind)}); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_alnum(char c) { return is_alpha(c) || is_digit(c); }

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Ast run() {
        NodePtr root = expression();
        skip_space();
        if (pos_ < src_.size()) {
            if (src_[pos_] == ')')
                fail("unbalanced ')'");
            fail(std::string("unexpected '") + src_[pos_] + "'");
        }
        return Ast(std::move(root));
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;

    [[noreturn]] void fail(const std::string &what) const { throw ParseError(pos_ + 1, what); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string &what) const { throw ParseError(pos + 1, what); }

    struct DepthGuard {
        Parser &p;
        explicit DepthGuard(Parser &parser) : p(parser) {
            if (++p.depth_ > kMaxDepth)
                p.fail("expression nested too deeply");
        }
        ~DepthGuard() { --p.depth_; }
    };

    void skip_space() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
            ++pos_;
    }

    char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

    // Consume an operator spelled either "c" or ".c".
    bool accept_op(char c) {
        skip_space();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        if (peek() == '.' && peek(1) == c) {
            pos_ += 2;
            return true;
        }
        return false;
    }

    NodePtr expression() {
        DepthGuard guard(*this);
        NodePtr lhs = term();
        for (;;) {
            skip_space();
            if (peek() == '+') {
                ++pos_;
                lhs = make(Binary{BinaryOp::Add, lhs, term()});
            } else if (peek() == '-') {
                ++pos_;
                lhs = make(Binary{BinaryOp::Sub, lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            if (accept_op('*'))
                lhs = make(Binary{BinaryOp::Mul, lhs, unary()});
            else if (accept_op('/'))
                lhs = make(Binary{BinaryOp::Div, lhs, unary()});
            else
                return lhs;
        }
    }

    NodePtr unary() {
        DepthGuard guard(*this);
        skip_space();
        if (peek() == '-') {
            ++pos_;
            return make(Negate{unary()});
        }
        if (peek() == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept_op('^'))
            return make(Binary{BinaryOp::Pow, base, unary()});
        return base;
    }

    NodePtr primary() {
        skip_space();
        const std::size_t start = pos_;
        const char c = peek();
        if (c == '\0')
            fail("unexpected end of input");
        if (is_digit(c) || (c == '.' && is_digit(peek(1))))
            return number();
        if (c == '(') {
            ++pos_;
            NodePtr inner = expression();
            skip_space();
            if (peek() != ')')
                fail_at(start, "unbalanced '('");
            ++pos_;
            return inner;
        }
        if (is_alpha(c)) {
            while (is_alnum(peek()))
                ++pos_;
            const std::string_view word = src_.substr(start, pos_ - start);
            if (word == "x")
                return make(Variable{});
            if (word == "i")
                return make(ImaginaryUnit{});
            if (word == "pi")
                return make(Number{std::numbers::pi});
            for (const FuncEntry &entry : kFunctions) {
                if (entry.name == word) {
                    skip_space();
                    const std::size_t open = pos_;
                    if (peek() != '(')
                        fail("expected '(' after " + std::string(word));
                    ++pos_;
                    NodePtr arg = expression();
                    skip_space();
                    if (peek() != ')')
                        fail_at(open, "unbalanced '('");
                    ++pos_;
                    return make(Call{entry.func, arg});
                }
            }
            fail_at(start, "unknown name '" + std::string(word) + "'");
        }
        if (c == ')')
            fail("unbalanced ')'");
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr number() {
        const std::size_t start = pos_;
        while (is_digit(peek()))
            ++pos_;
        // "1./x" is 1 ./ x: a dot that begins an elementwise operator stays out.
        if (peek() == '.' && peek(1) != '*' && peek(1) != '/' && peek(1) != '^') {
            ++pos_;
            while (is_digit(peek()))
                ++pos_;
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t look = 1;
            if (peek(look) == '+' || peek(look) == '-')
                ++look;
            if (is_digit(peek(look))) {
                pos_ += look;
                while (is_digit(peek()))
                    ++pos_;
            }
        }
        std::string text(src_.substr(start, pos_ - start));
        if (text.back() == '.')
            text.pop_back();
        double value = 0.0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size())
            fail_at(start, "malformed number");
        NodePtr literal = make(Number{value});
        if (peek() == 'i' && !is_alnum(peek(1))) {
            ++pos_;
            return make(Binary{BinaryOp::Mul, literal, make(ImaginaryUnit{})});
        }
        if (is_alpha(peek()))
            fail("unexpected name after number");
        return literal;
    }
};

bool is_real(Complex z) { return z.imag() == 0.0; }
Complex real(double v) { return {v, 0.0}; }

void print_node(const Node &node, std::string &out) {
    std::visit(
        [&](const auto &n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Number>) {
                char buf[64];
                const auto res = std::to_chars(buf, buf + sizeof buf, n.value);
                out.append(buf, res.ptr);
            } else if constexpr (std::is_same_v<T, ImaginaryUnit>) {
                out += "i";
            } else if constexpr (std::is_same_v<T, Variable>) {
                out += "x";
            } else if constexpr (std::is_same_v<T, Negate>) {
                out += "(-";
                print_node(*n.operand, out);
                out += ")";
            } else if constexpr (std::is_same_v<T, Binary>) {
                static constexpr char ops[] = {'+', '-', '*', '/', '^'};
                out += "(";
                print_node(*n.lhs, out);
                out += ops[static_cast<int>(n.op)];
                print_node(*n.rhs, out);
                out += ")";
            } else {
                out += func_name(n.func);
                out += "(";
                print_node(*n.arg, out);
                out += ")";
            }
        },
        node.kind);
}

} // namespace

ParseError::ParseError(std::size_t column, const std::string &what)
    : std::runtime_error("column " + std::to_string(column) + ": " + what), column_(column) {}

Ast parse(std::string_view src) { return Parser(src).run(); }

std::string_view func_name(Func f) {
    for (const FuncEntry &entry : kFunctions)
        if (entry.func == f)
            return entry.name;
    return "?";
}

Complex apply(Func f, Complex z) {
    const bool r = is_real(z);
    const double v = z.real();
    switch (f) {
    case Func::Exp:
        return r ? real(std::exp(v)) : std::exp(z);
    case Func::Sin:
        return r ? real(std::sin(v)) : std::sin(z);
    case Func::Cos:
        return r ? real(std::cos(v)) : std::cos(z);
    case Func::Tan:
        return r ? real(std::tan(v)) : std::tan(z);
    case Func::Log:
        return r && v >= 0.0 ? real(std::log(v)) : std::log(r ? Complex(v, 0.0) : z);
    case Func::Sqrt:
        return r && v >= 0.0 ? real(std::sqrt(v)) : std::sqrt(r ? Complex(v, 0.0) : z);
    case Func::Abs:
        return real(r ? std::fabs(v) : std::abs(z));
    case Func::Sinh:
        return r ? real(std::sinh(v)) : std::sinh(z);
    case Func::Cosh:
        return r ? real(std::cosh(v)) : std::cosh(z);
    case Func::Tanh:
        return r ? real(std::tanh(v)) : std::tanh(z);
    case Func::Acos:
        return r && std::fabs(v) <= 1.0 ? real(std::acos(v)) : std::acos(r ? Complex(v, 0.0) : z);
    case Func::Asin:
        return r && std::fabs(v) <= 1.0 ? real(std::asin(v)) : std::asin(r ? Complex(v, 0.0) : z);
    case Func::Atan:
        return r ? real(std::atan(v)) : std::atan(z);
    }
    return {std::nan(""), std::nan("")};
}

Complex apply(BinaryOp op, Complex a, Complex b) {
    const bool r = is_real(a) && is_real(b);
    switch (op) {
    case BinaryOp::Add:
        return r ? real(a.real() + b.real()) : a + b;
    case BinaryOp::Sub:
        return r ? real(a.real() - b.real()) : a - b;
    case BinaryOp::Mul:
        return r ? real(a.real() * b.real()) : a * b;
    case BinaryOp::Div:
        return r ? real(a.real() / b.real()) : a / b;
    case BinaryOp::Pow:
        if (r && (a.real() >= 0.0 || std::trunc(b.real()) == b.real() || std::isnan(a.real())))
            return real(std::pow(a.real(), b.real()));
        // Principal branch.
        return std::pow(a, b);
    }
    return {std::nan(""), std::nan("")};
}

Complex eval_node(const Node &node, Complex x) {
    return std::visit(
        [&](const auto &n) -> Complex {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Number>)
                return real(n.value);
            else if constexpr (std::is_same_v<T, ImaginaryUnit>)
                return {0.0, 1.0};
            else if constexpr (std::is_same_v<T, Variable>)
                return x;
            else if constexpr (std::is_same_v<T, Negate>) {
                const Complex v = eval_node(*n.operand, x);
                return is_real(v) ? real(-v.real()) : -v;
            } else if constexpr (std::is_same_v<T, Binary>)
                return apply(n.op, eval_node(*n.lhs, x), eval_node(*n.rhs, x));
            else
                return apply(n.func, eval_node(*n.arg, x));
        },
        node.kind);
}

Complex eval_ast(const Ast &ast, Complex x) { return eval_node(ast.root(), x); }

std::string print(const Ast &ast) {
    std::string out;
    print_node(ast.root(), out);
    return out;
}

bool structurally_equal(const Node &a, const Node &b) {
    if (a.kind.index() != b.kind.index())
        return false;
    return std::visit(
        [&](const auto &na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const T &nb = std::get<T>(b.kind);
            if constexpr (std::is_same_v<T, Number>)
                return std::bit_cast<std::uint64_t>(na.value) == std::bit_cast<std::uint64_t>(nb.value);
            else if constexpr (std::is_same_v<T, ImaginaryUnit> || std::is_same_v<T, Variable>)
                return true;
            else if constexpr (std::is_same_v<T, Negate>)
                return structurally_equal(*na.operand, *nb.operand);
            else if constexpr (std::is_same_v<T, Binary>)
                return na.op == nb.op && structurally_equal(*na.lhs, *nb.lhs) && structurally_equal(*na.rhs, *nb.rhs);
            else
                return na.func == nb.func && structurally_equal(*na.arg, *nb.arg);
        },
        a.kind);
}

} // namespace funcut::expr
