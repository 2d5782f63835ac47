#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcade {

class ExpressionError : public std::runtime_error {
public:
    ExpressionError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Compiled arithmetic expression over variables x1..xn.
///
/// Grammar (lowest to highest precedence):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' unary)?          right associative, so -x^2 == -(x^2)
///   atom   := number | 'x'<index> | func '(' expr ')' | '(' expr ')'
///   func   := abs | cos | sin | exp
///
/// Evaluation walks a flat node array; a compiled Expression is immutable and
/// cheap to copy.
class Expression {
public:
    /// Parses `source`; variable indices must lie in [1, dimension].
    static Expression parse(std::string_view source, std::size_t dimension);

    double evaluate(std::span<const double> x) const;

    const std::string& source() const { return source_; }

    enum class Op : unsigned char { constant, variable, add, sub, mul, div, pow, neg, abs, cos, sin, exp };
    struct Node {
        Op op;
        double value = 0.0;       // constant
        std::size_t index = 0;    // variable (zero-based)
        int lhs = -1;
        int rhs = -1;
    };

private:
    std::string source_;
    std::shared_ptr<const std::vector<Node>> nodes_;
    int root_ = -1;

    double eval_node(int id, std::span<const double> x) const;
    friend class ExpressionParser;
};

} // namespace pcade
