#pragma once
// Small arithmetic-expression parser used by scene files to describe fields,
// densities, and parametric shapes.
//
// Grammar: + - * / ^ (right-assoc), unary minus, parentheses, the functions
// sin cos exp sqrt, the constant pi, numeric literals, and a caller-supplied
// variable list (e.g. {x, y, z} for fields, {t} for curves).

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fieldcalc {

class ExpressionError : public std::runtime_error {
public:
    ExpressionError(const std::string& message, size_t position)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    size_t position() const { return position_; }

private:
    size_t position_;
};

namespace detail {

struct ExprNode {
    enum class Kind { Number, Variable, Negate, Add, Sub, Mul, Div, Pow, Sin, Cos, Exp, Sqrt };
    Kind kind;
    double number = 0.0;
    size_t varIndex = 0;
    std::shared_ptr<const ExprNode> lhs, rhs;
};

using ExprNodePtr = std::shared_ptr<const ExprNode>;

inline double evalNode(const ExprNode& n, std::span<const double> vars) {
    using K = ExprNode::Kind;
    switch (n.kind) {
        case K::Number: return n.number;
        case K::Variable: return vars[n.varIndex];
        case K::Negate: return -evalNode(*n.lhs, vars);
        case K::Add: return evalNode(*n.lhs, vars) + evalNode(*n.rhs, vars);
        case K::Sub: return evalNode(*n.lhs, vars) - evalNode(*n.rhs, vars);
        case K::Mul: return evalNode(*n.lhs, vars) * evalNode(*n.rhs, vars);
        case K::Div: return evalNode(*n.lhs, vars) / evalNode(*n.rhs, vars);
        case K::Pow: return std::pow(evalNode(*n.lhs, vars), evalNode(*n.rhs, vars));
        case K::Sin: return std::sin(evalNode(*n.lhs, vars));
        case K::Cos: return std::cos(evalNode(*n.lhs, vars));
        case K::Exp: return std::exp(evalNode(*n.lhs, vars));
        case K::Sqrt: return std::sqrt(evalNode(*n.lhs, vars));
    }
    return 0.0;
}

class ExprParser {
public:
    ExprParser(const std::string& src, std::span<const std::string> variables)
        : src_(src), vars_(variables) {}

    ExprNodePtr parse() {
        ExprNodePtr e = parseAdditive();
        skipSpace();
        if (pos_ != src_.size()) throw ExpressionError("unexpected trailing input", pos_);
        return e;
    }

private:
    static std::shared_ptr<ExprNode> make(ExprNode::Kind k, ExprNodePtr l = nullptr,
                                          ExprNodePtr r = nullptr) {
        auto n = std::make_shared<ExprNode>();
        n->kind = k;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    static std::shared_ptr<ExprNode> makeNumber(double value) {
        auto n = make(ExprNode::Kind::Number);
        n->number = value;
        return n;
    }

    void skipSpace() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skipSpace();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprNodePtr parseAdditive() {
        ExprNodePtr e = parseMultiplicative();
        for (;;) {
            if (consume('+')) e = make(ExprNode::Kind::Add, e, parseMultiplicative());
            else if (consume('-')) e = make(ExprNode::Kind::Sub, e, parseMultiplicative());
            else return e;
        }
    }

    ExprNodePtr parseMultiplicative() {
        ExprNodePtr e = parseUnary();
        for (;;) {
            if (consume('*')) e = make(ExprNode::Kind::Mul, e, parseUnary());
            else if (consume('/')) e = make(ExprNode::Kind::Div, e, parseUnary());
            else return e;
        }
    }

    ExprNodePtr parseUnary() {
        if (consume('-')) return make(ExprNode::Kind::Negate, parseUnary());
        return parsePower();
    }

    ExprNodePtr parsePower() {
        ExprNodePtr base = parsePrimary();
        if (consume('^')) return make(ExprNode::Kind::Pow, base, parseUnary());
        return base;
    }

    ExprNodePtr parsePrimary() {
        skipSpace();
        if (pos_ >= src_.size()) throw ExpressionError("unexpected end of expression", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            ExprNodePtr e = parseAdditive();
            if (!consume(')')) throw ExpressionError("missing ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = src_.c_str() + pos_;
            char* end = nullptr;
            const double value = std::strtod(begin, &end);
            if (end == begin) throw ExpressionError("malformed number", pos_);
            pos_ += static_cast<size_t>(end - begin);
            return makeNumber(value);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name = src_.substr(start, pos_ - start);
            if (name == "pi") return makeNumber(std::numbers::pi);
            ExprNode::Kind fn;
            if (name == "sin") fn = ExprNode::Kind::Sin;
            else if (name == "cos") fn = ExprNode::Kind::Cos;
            else if (name == "exp") fn = ExprNode::Kind::Exp;
            else if (name == "sqrt") fn = ExprNode::Kind::Sqrt;
            else {
                for (size_t i = 0; i < vars_.size(); ++i) {
                    if (vars_[i] == name) {
                        auto n = make(ExprNode::Kind::Variable);
                        n->varIndex = i;
                        return n;
                    }
                }
                throw ExpressionError("unknown identifier '" + name + "'", start);
            }
            if (!consume('(')) throw ExpressionError("expected '(' after function name", pos_);
            ExprNodePtr arg = parseAdditive();
            if (!consume(')')) throw ExpressionError("missing ')'", pos_);
            return make(fn, arg);
        }
        throw ExpressionError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& src_;
    std::span<const std::string> vars_;
    size_t pos_ = 0;
};

}  // namespace detail

// A parsed expression over a fixed variable list; evaluation takes the
// variable values in the same order.
class Expression {
public:
    Expression() = default;

    static Expression parse(const std::string& source, std::span<const std::string> variables) {
        Expression e;
        e.source_ = source;
        e.root_ = detail::ExprParser(source, variables).parse();
        return e;
    }

    double operator()(std::span<const double> values) const { return detail::evalNode(*root_, values); }

    const std::string& source() const { return source_; }
    bool valid() const { return root_ != nullptr; }

private:
    detail::ExprNodePtr root_;
    std::string source_;
};

}  // namespace fieldcalc
