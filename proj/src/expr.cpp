#include "ostrowski/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "ostrowski/error.hpp"

namespace ostrowski {

namespace {

NodePtr make_constant(double v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Constant;
    n->value = v;
    return n;
}

NodePtr make_variable() {
    auto n = std::make_shared<Node>();
    n->op = Op::Variable;
    return n;
}

NodePtr make_node(Op op, NodePtr lhs, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        skip_space();
        if (pos_ == text_.size()) {
            throw ParseError("empty expression", pos_);
        }
        NodePtr root = parse_expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return root;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void unexpected() const {
        if (pos_ >= text_.size()) {
            throw ParseError("unexpected end of input", pos_);
        }
        throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (accept('+')) {
                lhs = make_node(Op::Add, lhs, parse_term());
            } else if (accept('-')) {
                lhs = make_node(Op::Sub, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                lhs = make_node(Op::Mul, lhs, parse_unary());
            } else if (accept('/')) {
                lhs = make_node(Op::Div, lhs, parse_unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        if (accept('-')) {
            return make_node(Op::Neg, parse_unary());
        }
        if (accept('+')) {
            return parse_unary();
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (accept('^')) {
            return make_node(Op::Pow, base, parse_unary());
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) {
            unexpected();
        }
        const char c = text_[pos_];
        if (is_digit(c) || c == '.') {
            return parse_number();
        }
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!accept(')')) {
                unexpected();
            }
            return inner;
        }
        if (is_ident_start(c)) {
            return parse_identifier();
        }
        unexpected();
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        std::size_t end = pos_;
        while (end < text_.size() && is_digit(text_[end])) ++end;
        if (end < text_.size() && text_[end] == '.') {
            ++end;
            while (end < text_.size() && is_digit(text_[end])) ++end;
        }
        if (end == start + 1 && text_[start] == '.') {
            throw ParseError("malformed number", start);
        }
        if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
            std::size_t exp = end + 1;
            if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-')) ++exp;
            if (exp < text_.size() && is_digit(text_[exp])) {
                while (exp < text_.size() && is_digit(text_[exp])) ++exp;
                end = exp;
            } else if (!(exp == end + 1 && exp < text_.size() && is_ident_char(text_[exp]))) {
                // "1e", "1e+", "1e-" ; "1exp(t)" falls through to the trailing-character check
                throw ParseError("malformed exponent", end);
            }
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
        if (ec == std::errc::result_out_of_range || !std::isfinite(value)) {
            throw ParseError("numeric literal out of range", start);
        }
        if (ec != std::errc() || ptr != text_.data() + end) {
            throw ParseError("malformed number", start);
        }
        pos_ = end;
        return make_constant(value);
    }

    NodePtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);

        if (name == "t") return make_variable();
        if (name == "pi") return make_constant(std::numbers::pi);
        if (name == "e") return make_constant(std::numbers::e);

        Op op;
        if (name == "sin") {
            op = Op::Sin;
        } else if (name == "cos") {
            op = Op::Cos;
        } else if (name == "exp") {
            op = Op::Exp;
        } else if (name == "ln") {
            op = Op::Ln;
        } else if (name == "abs") {
            op = Op::Abs;
        } else if (name == "sqrt") {
            op = Op::Sqrt;
        } else {
            throw ParseError("unknown identifier '" + std::string(name) + "'", start);
        }
        if (!accept('(')) {
            unexpected();
        }
        NodePtr arg = parse_expr();
        if (!accept(')')) {
            unexpected();
        }
        return make_node(op, arg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* function_name(Op op) {
    switch (op) {
        case Op::Sin: return "sin";
        case Op::Cos: return "cos";
        case Op::Exp: return "exp";
        case Op::Ln: return "ln";
        case Op::Abs: return "abs";
        case Op::Sqrt: return "sqrt";
        default: return "?";
    }
}

char binary_symbol(Op op) {
    switch (op) {
        case Op::Add: return '+';
        case Op::Sub: return '-';
        case Op::Mul: return '*';
        case Op::Div: return '/';
        case Op::Pow: return '^';
        default: return '?';
    }
}

bool is_integer(double v) { return std::isfinite(v) && std::trunc(v) == v; }

[[noreturn]] void domain_error(const char* what, const Node& node) {
    throw DomainError(what, serialize(node));
}

[[noreturn]] void nondiff_error(const char* what, const Node& node) {
    throw NondifferentiableError(what, serialize(node));
}

double checked(double v, const Node& node) {
    if (!std::isfinite(v)) {
        domain_error("non-finite value", node);
    }
    return v;
}

double eval_node(const Node& node, double t) {
    switch (node.op) {
        case Op::Constant: return node.value;
        case Op::Variable: return t;
        case Op::Add: return checked(eval_node(*node.lhs, t) + eval_node(*node.rhs, t), node);
        case Op::Sub: return checked(eval_node(*node.lhs, t) - eval_node(*node.rhs, t), node);
        case Op::Mul: return checked(eval_node(*node.lhs, t) * eval_node(*node.rhs, t), node);
        case Op::Div: {
            const double num = eval_node(*node.lhs, t);
            const double den = eval_node(*node.rhs, t);
            if (den == 0.0) domain_error("division by zero", node);
            return checked(num / den, node);
        }
        case Op::Pow: {
            const double base = eval_node(*node.lhs, t);
            const double expo = eval_node(*node.rhs, t);
            if (base < 0.0 && !is_integer(expo)) domain_error("negative base with non-integer exponent", node);
            if (base == 0.0 && expo < 0.0) domain_error("zero base with negative exponent", node);
            return checked(std::pow(base, expo), node);
        }
        case Op::Neg: return -eval_node(*node.lhs, t);
        case Op::Sin: return std::sin(eval_node(*node.lhs, t));
        case Op::Cos: return std::cos(eval_node(*node.lhs, t));
        case Op::Exp: return checked(std::exp(eval_node(*node.lhs, t)), node);
        case Op::Ln: {
            const double u = eval_node(*node.lhs, t);
            if (!(u > 0.0)) domain_error("logarithm of non-positive value", node);
            return std::log(u);
        }
        case Op::Abs: return std::fabs(eval_node(*node.lhs, t));
        case Op::Sqrt: {
            const double u = eval_node(*node.lhs, t);
            if (u < 0.0) domain_error("square root of negative value", node);
            return std::sqrt(u);
        }
    }
    domain_error("unknown node", node);
}

DualValue d_checked(DualValue v, const Node& node) {
    if (!std::isfinite(v.value)) domain_error("non-finite value", node);
    if (!std::isfinite(v.deriv)) nondiff_error("non-finite derivative", node);
    return v;
}

DualValue dual_node(const Node& node, double t) {
    switch (node.op) {
        case Op::Constant: return {node.value, 0.0};
        case Op::Variable: return {t, 1.0};
        case Op::Add: {
            const DualValue u = dual_node(*node.lhs, t);
            const DualValue v = dual_node(*node.rhs, t);
            return d_checked({u.value + v.value, u.deriv + v.deriv}, node);
        }
        case Op::Sub: {
            const DualValue u = dual_node(*node.lhs, t);
            const DualValue v = dual_node(*node.rhs, t);
            return d_checked({u.value - v.value, u.deriv - v.deriv}, node);
        }
        case Op::Mul: {
            const DualValue u = dual_node(*node.lhs, t);
            const DualValue v = dual_node(*node.rhs, t);
            return d_checked({u.value * v.value, u.deriv * v.value + u.value * v.deriv}, node);
        }
        case Op::Div: {
            const DualValue u = dual_node(*node.lhs, t);
            const DualValue v = dual_node(*node.rhs, t);
            if (v.value == 0.0) domain_error("division by zero", node);
            const double q = u.value / v.value;
            return d_checked({q, (u.deriv - q * v.deriv) / v.value}, node);
        }
        case Op::Pow: {
            const DualValue u = dual_node(*node.lhs, t);
            const DualValue v = dual_node(*node.rhs, t);
            if (u.value < 0.0 && !is_integer(v.value)) domain_error("negative base with non-integer exponent", node);
            if (u.value == 0.0 && v.value < 0.0) domain_error("zero base with negative exponent", node);
            const double value = std::pow(u.value, v.value);
            double deriv = 0.0;
            if (u.deriv != 0.0) {
                if (v.value == 0.0) {
                    deriv = 0.0;
                } else if (u.value == 0.0 && v.value < 1.0) {
                    nondiff_error("power with exponent below one at zero base", node);
                } else {
                    deriv = v.value * std::pow(u.value, v.value - 1.0) * u.deriv;
                }
            }
            if (v.deriv != 0.0) {
                if (u.value < 0.0) domain_error("negative base with variable exponent", node);
                if (u.value == 0.0) nondiff_error("zero base with variable exponent", node);
                deriv += value * std::log(u.value) * v.deriv;
            }
            return d_checked({value, deriv}, node);
        }
        case Op::Neg: {
            const DualValue u = dual_node(*node.lhs, t);
            return {-u.value, -u.deriv};
        }
        case Op::Sin: {
            const DualValue u = dual_node(*node.lhs, t);
            return {std::sin(u.value), std::cos(u.value) * u.deriv};
        }
        case Op::Cos: {
            const DualValue u = dual_node(*node.lhs, t);
            return {std::cos(u.value), -std::sin(u.value) * u.deriv};
        }
        case Op::Exp: {
            const DualValue u = dual_node(*node.lhs, t);
            const double e = std::exp(u.value);
            return d_checked({e, e * u.deriv}, node);
        }
        case Op::Ln: {
            const DualValue u = dual_node(*node.lhs, t);
            if (!(u.value > 0.0)) domain_error("logarithm of non-positive value", node);
            return d_checked({std::log(u.value), u.deriv / u.value}, node);
        }
        case Op::Abs: {
            const DualValue u = dual_node(*node.lhs, t);
            if (u.value == 0.0) {
                if (u.deriv == 0.0) return {0.0, 0.0};
                nondiff_error("abs is not differentiable at zero", node);
            }
            return u.value > 0.0 ? u : DualValue{-u.value, -u.deriv};
        }
        case Op::Sqrt: {
            const DualValue u = dual_node(*node.lhs, t);
            if (u.value < 0.0) domain_error("square root of negative value", node);
            if (u.value == 0.0) {
                if (u.deriv == 0.0) return {0.0, 0.0};
                nondiff_error("sqrt is not differentiable at zero", node);
            }
            const double s = std::sqrt(u.value);
            return d_checked({s, 0.5 * u.deriv / s}, node);
        }
    }
    domain_error("unknown node", node);
}

}  // namespace

std::string serialize(const Node& node) {
    switch (node.op) {
        case Op::Constant: {
            std::string s = format_number(node.value);
            return node.value < 0.0 || std::signbit(node.value) ? "(" + s + ")" : s;
        }
        case Op::Variable: return "t";
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div:
        case Op::Pow:
            return "(" + serialize(*node.lhs) + " " + binary_symbol(node.op) + " " + serialize(*node.rhs) + ")";
        case Op::Neg: return "(-" + serialize(*node.lhs) + ")";
        default: return std::string(function_name(node.op)) + "(" + serialize(*node.lhs) + ")";
    }
}

FunctionSpec::FunctionSpec() : FunctionSpec(make_variable(), "t") {}

FunctionSpec::FunctionSpec(NodePtr root, std::string source)
    : root_(std::move(root)), source_text_(std::move(source)) {}

FunctionSpec FunctionSpec::parse(std::string_view text) {
    return FunctionSpec(Parser(text).parse(), std::string(text));
}

FunctionSpec FunctionSpec::from_node(NodePtr root) {
    std::string text = ostrowski::serialize(*root);
    return FunctionSpec(std::move(root), std::move(text));
}

double FunctionSpec::eval(double t) const { return eval_node(*root_, t); }

DualValue FunctionSpec::eval_dual(double t) const { return dual_node(*root_, t); }

std::string FunctionSpec::serialize() const { return ostrowski::serialize(*root_); }

}  // namespace ostrowski
