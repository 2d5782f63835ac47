#include "pcade/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace pcade {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, std::size_t dimension)
        : text_(text), dimension_(dimension) {}

    Expression run() {
        Expression e;
        e.source_ = std::string(text_);
        const int root = parse_expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw ExpressionError("unexpected trailing input '" + std::string(text_.substr(pos_, 1)) + "'", pos_);
        }
        e.root_ = root;
        e.nodes_ = std::make_shared<const std::vector<Expression::Node>>(std::move(nodes_));
        return e;
    }

private:
    using Op = Expression::Op;

    std::string_view text_;
    std::size_t dimension_;
    std::size_t pos_ = 0;
    std::vector<Expression::Node> nodes_;

    int add(Expression::Node node) {
        nodes_.push_back(node);
        return static_cast<int>(nodes_.size() - 1);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
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

    void expect(char c) {
        if (!accept(c)) {
            throw ExpressionError(std::string("expected '") + c + "'", pos_);
        }
    }

    int parse_expr() {
        int lhs = parse_term();
        for (;;) {
            if (accept('+')) {
                lhs = add({Op::add, 0.0, 0, lhs, parse_term()});
            } else if (accept('-')) {
                lhs = add({Op::sub, 0.0, 0, lhs, parse_term()});
            } else {
                return lhs;
            }
        }
    }

    int parse_term() {
        int lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                lhs = add({Op::mul, 0.0, 0, lhs, parse_unary()});
            } else if (accept('/')) {
                lhs = add({Op::div, 0.0, 0, lhs, parse_unary()});
            } else {
                return lhs;
            }
        }
    }

    int parse_unary() {
        if (accept('-')) {
            return add({Op::neg, 0.0, 0, parse_unary(), -1});
        }
        if (accept('+')) {
            return parse_unary();
        }
        return parse_power();
    }

    int parse_power() {
        const int base = parse_atom();
        if (accept('^')) {
            return add({Op::pow, 0.0, 0, base, parse_unary()});
        }
        return base;
    }

    int parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) {
            throw ExpressionError("unexpected end of expression", pos_);
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            const int inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return parse_identifier();
        }
        throw ExpressionError(std::string("unexpected character '") + c + "'", pos_);
    }

    int parse_number() {
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{}) {
            throw ExpressionError("malformed number", pos_);
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return add({Op::constant, value, 0, -1, -1});
    }

    int parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::string_view word = text_.substr(start, pos_ - start);
        if (word.size() > 1 && word[0] == 'x' &&
            word.find_first_not_of("0123456789", 1) == std::string_view::npos) {
            std::size_t index = 0;
            std::from_chars(word.data() + 1, word.data() + word.size(), index);
            if (index < 1 || index > dimension_) {
                throw ExpressionError("variable " + std::string(word) + " outside x1..x" + std::to_string(dimension_),
                                      start);
            }
            return add({Op::variable, 0.0, index - 1, -1, -1});
        }
        Op op;
        if (word == "abs") {
            op = Op::abs;
        } else if (word == "cos") {
            op = Op::cos;
        } else if (word == "sin") {
            op = Op::sin;
        } else if (word == "exp") {
            op = Op::exp;
        } else {
            throw ExpressionError("unknown identifier '" + std::string(word) + "'", start);
        }
        expect('(');
        const int arg = parse_expr();
        expect(')');
        return add({op, 0.0, 0, arg, -1});
    }
};

Expression Expression::parse(std::string_view source, std::size_t dimension) {
    return ExpressionParser(source, dimension).run();
}

double Expression::evaluate(std::span<const double> x) const {
    if (!nodes_) {
        throw std::logic_error("Expression::evaluate on an empty expression");
    }
    return eval_node(root_, x);
}

double Expression::eval_node(int id, std::span<const double> x) const {
    const Node& n = (*nodes_)[static_cast<std::size_t>(id)];
    switch (n.op) {
    case Op::constant: return n.value;
    case Op::variable: return x[n.index];
    case Op::add: return eval_node(n.lhs, x) + eval_node(n.rhs, x);
    case Op::sub: return eval_node(n.lhs, x) - eval_node(n.rhs, x);
    case Op::mul: return eval_node(n.lhs, x) * eval_node(n.rhs, x);
    case Op::div: return eval_node(n.lhs, x) / eval_node(n.rhs, x);
    case Op::pow: return std::pow(eval_node(n.lhs, x), eval_node(n.rhs, x));
    case Op::neg: return -eval_node(n.lhs, x);
    case Op::abs: return std::abs(eval_node(n.lhs, x));
    case Op::cos: return std::cos(eval_node(n.lhs, x));
    case Op::sin: return std::sin(eval_node(n.lhs, x));
    case Op::exp: return std::exp(eval_node(n.lhs, x));
    }
    return 0.0;
}

} // namespace pcade
