#pragma once

#include "pcade/rng.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcade {

using Vector = std::vector<double>;

/// Real-valued function of the decision vector (objective or constraint).
using ScalarFunction = std::function<double(std::span<const double>)>;

/// Default tolerance for equality constraints, |h(x)| <= delta counts as satisfied.
inline constexpr double kDefaultEqualityTolerance = 1e-4;

/// Sentinel violation assigned when a constraint evaluates to NaN or infinity.
inline constexpr double kNonFiniteViolation = std::numeric_limits<double>::infinity();

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Result of evaluating one point.
struct Evaluation {
    double f = 0.0;
    Vector inequality_violation; ///< max(0, g_i(x))
    Vector equality_violation;   ///< max(0, |h_j(x)| - delta)
    double violation = 0.0;      ///< sum of the two vectors, in evaluation order
    bool feasible = true;
    /// Set when the objective or any constraint produced NaN/inf. A non-finite
    /// constraint forces violation to +inf; the raw objective is kept as-is.
    bool non_finite = false;

    /// Objective usable for ordering: NaN maps to +inf.
    double ordering_f() const;
};

/// Metadata carried alongside externally supplied problems.
struct ProblemInfo {
    std::string objective_type;
    std::vector<std::string> tags;
};

/// Box-bounded constrained minimisation problem:
///   min f(x)  s.t.  g_i(x) <= 0,  h_j(x) = 0,  L <= x <= U.
///
/// Immutable after construction; evaluate() is const and thread-safe as long
/// as the supplied functions are.
class Problem {
public:
    Problem(std::string name, Vector lower, Vector upper, ScalarFunction objective,
            std::vector<ScalarFunction> inequalities = {},
            std::vector<ScalarFunction> equalities = {},
            double equality_tolerance = kDefaultEqualityTolerance);

    const std::string& name() const { return name_; }
    std::size_t dimension() const { return lower_.size(); }
    const Vector& lower() const { return lower_; }
    const Vector& upper() const { return upper_; }
    std::size_t inequality_count() const { return inequalities_.size(); }
    std::size_t equality_count() const { return equalities_.size(); }
    std::size_t constraint_count() const { return inequalities_.size() + equalities_.size(); }
    double equality_tolerance() const { return equality_tolerance_; }
    const ProblemInfo& info() const { return info_; }

    Evaluation evaluate(std::span<const double> x) const;

    bool in_bounds(std::span<const double> x) const;

    Problem with_equality_tolerance(double delta) const;
    Problem with_info(ProblemInfo info) const;

private:
    std::string name_;
    Vector lower_;
    Vector upper_;
    ScalarFunction objective_;
    std::vector<ScalarFunction> inequalities_;
    std::vector<ScalarFunction> equalities_;
    double equality_tolerance_;
    ProblemInfo info_;
};

struct Individual {
    Vector x;
    Evaluation eval;
};

Individual make_individual(const Problem& problem, Vector x);

/// x_i = L_i + (U_i - L_i) * rand
Vector random_point(const Problem& problem, Rng& rng);

/// Strict "feasible first, then lower f; among infeasible lower violation" order.
bool better_solution(const Evaluation& a, const Evaluation& b);

} // namespace pcade
