#pragma once

#include "pcade/problem.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pcade {

class UnknownProblem : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Name -> problem factory table.
///
/// Built-in entries:
///   sphere-linear    sum x^2, g = sum x - n/2 <= 0, box [-100, 100]^n
///   rosenbrock-box   unconstrained Rosenbrock on [-1, 2]^n (n >= 2)
///   rosenbrock-disk  2-D Rosenbrock with g = x^2 + y^2 - 2 <= 0, box [-1.5, 1.5]^2
///   eq-line          sum x^2 with h = x1 - x2 = 0, box [-100, 100]^n (n >= 2)
///   cec-meta:<path>  problem definition file (see problem_file.hpp); the
///                    requested dimension must match the file's `dim`
class ProblemRegistry {
public:
    using Factory = std::function<Problem(std::size_t dimension)>;

    /// Registry pre-populated with the built-in problems.
    static ProblemRegistry with_builtins();

    void add(std::string name, Factory factory);
    bool contains(std::string_view name) const;

    /// Throws UnknownProblem (listing registered names) or UnsupportedDimension.
    Problem get(std::string_view name, std::size_t dimension) const;

    std::vector<std::string> names() const;

private:
    std::map<std::string, Factory, std::less<>> factories_;
};

/// Shorthand for ProblemRegistry::with_builtins().get(name, dimension).
Problem make_problem(std::string_view name, std::size_t dimension);

/// Standard Rosenbrock sum_{i} 100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2.
double rosenbrock(std::span<const double> x);

} // namespace pcade
