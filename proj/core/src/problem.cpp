#include "pcade/problem.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace pcade {

double Evaluation::ordering_f() const {
    return std::isnan(f) ? std::numeric_limits<double>::infinity() : f;
}

Problem::Problem(std::string name, Vector lower, Vector upper, ScalarFunction objective,
                 std::vector<ScalarFunction> inequalities,
                 std::vector<ScalarFunction> equalities, double equality_tolerance)
    : name_(std::move(name)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      objective_(std::move(objective)),
      inequalities_(std::move(inequalities)),
      equalities_(std::move(equalities)),
      equality_tolerance_(equality_tolerance) {
    if (lower_.empty()) {
        throw std::invalid_argument("Problem '" + name_ + "': dimension must be positive");
    }
    if (lower_.size() != upper_.size()) {
        throw DimensionMismatch("Problem '" + name_ + "': bound vectors differ in length");
    }
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] < upper_[i])) {
            throw std::invalid_argument("Problem '" + name_ + "': lower bound must be below upper bound at index " +
                                        std::to_string(i));
        }
    }
    if (!objective_) {
        throw std::invalid_argument("Problem '" + name_ + "': missing objective");
    }
    if (!(equality_tolerance_ >= 0.0)) {
        throw std::invalid_argument("Problem '" + name_ + "': equality tolerance must be non-negative");
    }
}

Evaluation Problem::evaluate(std::span<const double> x) const {
    if (x.size() != dimension()) {
        throw DimensionMismatch("Problem '" + name_ + "': expected " + std::to_string(dimension()) +
                                " coordinates, got " + std::to_string(x.size()));
    }
    Evaluation out;
    out.f = objective_(x);
    if (!std::isfinite(out.f)) {
        out.non_finite = true;
    }

    bool bad_constraint = false;
    double total = 0.0;
    out.inequality_violation.reserve(inequalities_.size());
    for (const auto& g : inequalities_) {
        const double value = g(x);
        double violation = 0.0;
        if (!std::isfinite(value)) {
            bad_constraint = true;
            violation = kNonFiniteViolation;
        } else {
            violation = std::max(0.0, value);
        }
        out.inequality_violation.push_back(violation);
        total += violation;
    }
    out.equality_violation.reserve(equalities_.size());
    for (const auto& h : equalities_) {
        const double value = h(x);
        double violation = 0.0;
        if (!std::isfinite(value)) {
            bad_constraint = true;
            violation = kNonFiniteViolation;
        } else {
            violation = std::max(0.0, std::abs(value) - equality_tolerance_);
        }
        out.equality_violation.push_back(violation);
        total += violation;
    }
    if (bad_constraint) {
        out.non_finite = true;
        total = kNonFiniteViolation;
    }
    out.violation = total;
    out.feasible = (total == 0.0);
    return out;
}

bool Problem::in_bounds(std::span<const double> x) const {
    if (x.size() != dimension()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) {
            return false;
        }
    }
    return true;
}

Problem Problem::with_equality_tolerance(double delta) const {
    Problem copy = *this;
    if (!(delta >= 0.0)) {
        throw std::invalid_argument("equality tolerance must be non-negative");
    }
    copy.equality_tolerance_ = delta;
    return copy;
}

Problem Problem::with_info(ProblemInfo info) const {
    Problem copy = *this;
    copy.info_ = std::move(info);
    return copy;
}

Individual make_individual(const Problem& problem, Vector x) {
    Individual ind{std::move(x), {}};
    ind.eval = problem.evaluate(ind.x);
    return ind;
}

Vector random_point(const Problem& problem, Rng& rng) {
    const auto& lo = problem.lower();
    const auto& hi = problem.upper();
    Vector x(lo.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = lo[i] + (hi[i] - lo[i]) * rng.uniform();
    }
    return x;
}

bool better_solution(const Evaluation& a, const Evaluation& b) {
    if (a.feasible != b.feasible) {
        return a.feasible;
    }
    if (a.feasible) {
        return a.ordering_f() < b.ordering_f();
    }
    return a.violation < b.violation;
}

} // namespace pcade
