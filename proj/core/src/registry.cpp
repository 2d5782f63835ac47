#include "pcade/registry.hpp"

#include "pcade/problem_file.hpp"

#include <numeric>

namespace pcade {
namespace {

constexpr std::string_view kMetaPrefix = "cec-meta";

double sum_of_squares(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

void require_at_least(std::string_view name, std::size_t dimension, std::size_t minimum) {
    if (dimension < minimum) {
        throw UnsupportedDimension(std::string(name) + " requires dimension >= " + std::to_string(minimum) +
                                   ", got " + std::to_string(dimension));
    }
}

Problem sphere_linear(std::size_t n) {
    require_at_least("sphere-linear", n, 1);
    const double half_n = static_cast<double>(n) / 2.0;
    ScalarFunction g = [half_n](std::span<const double> x) {
        return std::accumulate(x.begin(), x.end(), 0.0) - half_n;
    };
    return Problem("sphere-linear", Vector(n, -100.0), Vector(n, 100.0), sum_of_squares, {g});
}

Problem rosenbrock_box(std::size_t n) {
    require_at_least("rosenbrock-box", n, 2);
    return Problem("rosenbrock-box", Vector(n, -1.0), Vector(n, 2.0), rosenbrock);
}

Problem rosenbrock_disk(std::size_t n) {
    if (n != 2) {
        throw UnsupportedDimension("rosenbrock-disk is defined for dimension 2 only, got " + std::to_string(n));
    }
    ScalarFunction g = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1] - 2.0; };
    return Problem("rosenbrock-disk", Vector(2, -1.5), Vector(2, 1.5), rosenbrock, {g});
}

Problem eq_line(std::size_t n) {
    require_at_least("eq-line", n, 2);
    ScalarFunction h = [](std::span<const double> x) { return x[0] - x[1]; };
    return Problem("eq-line", Vector(n, -100.0), Vector(n, 100.0), sum_of_squares, {}, {h});
}

} // namespace

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        s += 100.0 * a * a + b * b;
    }
    return s;
}

ProblemRegistry ProblemRegistry::with_builtins() {
    ProblemRegistry r;
    r.add("sphere-linear", sphere_linear);
    r.add("rosenbrock-box", rosenbrock_box);
    r.add("rosenbrock-disk", rosenbrock_disk);
    r.add("eq-line", eq_line);
    return r;
}

void ProblemRegistry::add(std::string name, Factory factory) {
    factories_[std::move(name)] = std::move(factory);
}

bool ProblemRegistry::contains(std::string_view name) const {
    return factories_.find(name) != factories_.end();
}

Problem ProblemRegistry::get(std::string_view name, std::size_t dimension) const {
    if (name.substr(0, kMetaPrefix.size()) == kMetaPrefix) {
        if (name.size() <= kMetaPrefix.size() + 1 || name[kMetaPrefix.size()] != ':') {
            throw UnknownProblem("cec-meta needs a definition file: use 'cec-meta:<path>'");
        }
        const auto def = load_problem_definition(std::string(name.substr(kMetaPrefix.size() + 1)));
        if (def.dimension != dimension) {
            throw UnsupportedDimension("problem file '" + def.name + "' defines dimension " +
                                       std::to_string(def.dimension) + ", requested " + std::to_string(dimension));
        }
        return build_problem(def);
    }
    const auto it = factories_.find(name);
    if (it == factories_.end()) {
        std::string known;
        for (const auto& n : names()) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw UnknownProblem("unknown problem '" + std::string(name) + "'; registered: " + known +
                             ", cec-meta:<path>");
    }
    return it->second(dimension);
}

std::vector<std::string> ProblemRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : factories_) {
        out.push_back(name);
    }
    return out;
}

Problem make_problem(std::string_view name, std::size_t dimension) {
    static const ProblemRegistry registry = ProblemRegistry::with_builtins();
    return registry.get(name, dimension);
}

} // namespace pcade
