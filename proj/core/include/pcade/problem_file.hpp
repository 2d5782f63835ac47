#pragma once

#include "pcade/problem.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pcade {

class ProblemFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Externally supplied problem definition, e.g. a benchmark instance described
/// by its metadata plus expression strings.
///
/// Text format, one `key = value` per line, `#` starts a comment:
///
///     name   = demo
///     dim    = 2
///     bounds = -1 2              # one pair for every coordinate, or 2*dim numbers
///     delta  = 1e-4              # optional
///     f      = (1 - x1)^2 + 100*(x2 - x1^2)^2
///     g      = x1^2 + x2^2 - 2   # repeatable
///     h      = x1 - x2           # repeatable
///     type   = Non Separable     # optional metadata
///     tags   = rotated, separable-constraints
struct ProblemDefinition {
    std::string name;
    std::size_t dimension = 0;
    Vector lower;
    Vector upper;
    double equality_tolerance = kDefaultEqualityTolerance;
    std::string objective;
    std::vector<std::string> inequalities;
    std::vector<std::string> equalities;
    ProblemInfo info;
};

ProblemDefinition parse_problem_definition(std::string_view text);
ProblemDefinition load_problem_definition(const std::filesystem::path& path);

/// Compiles the expressions; throws ExpressionError on bad syntax.
Problem build_problem(const ProblemDefinition& definition);

} // namespace pcade
