#include "pcade/operators.hpp"

#include "pcade/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace pcade::de {
namespace {

void require_same_length(std::span<const double> a, std::span<const double> b, const char* what) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(what) + ": vectors differ in length");
    }
}

void require_population(std::size_t size, std::size_t minimum, const char* what) {
    if (size < minimum) {
        throw PopulationTooSmall(std::string(what) + ": population of " + std::to_string(size) +
                                 " is below the required " + std::to_string(minimum));
    }
}

} // namespace

std::vector<std::size_t> distinct_indices(std::size_t size, std::size_t exclude, std::size_t count, Rng& rng) {
    const std::size_t available = size - (exclude < size ? 1 : 0);
    if (count > available) {
        throw PopulationTooSmall("distinct_indices: cannot draw " + std::to_string(count) + " of " +
                                 std::to_string(available));
    }
    std::vector<std::size_t> out;
    out.reserve(count);
    while (out.size() < count) {
        const std::size_t r = rng.below(size);
        if (r == exclude || std::find(out.begin(), out.end(), r) != out.end()) {
            continue;
        }
        out.push_back(r);
    }
    return out;
}

Vector rand_1(std::span<const double> base, std::span<const double> a, std::span<const double> b, double F) {
    require_same_length(base, a, "rand_1");
    require_same_length(base, b, "rand_1");
    Vector v(base.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = base[j] + F * (a[j] - b[j]);
    }
    return v;
}

Vector mutate_rand_1(std::span<const Vector> pop, std::size_t i, double F, Rng& rng) {
    require_population(pop.size(), 4, "mutate_rand_1");
    const auto r = distinct_indices(pop.size(), i, 3, rng);
    return rand_1(pop[r[0]], pop[r[1]], pop[r[2]], F);
}

Vector current_to_pbest(std::span<const double> target, std::span<const double> pbest,
                        std::span<const double> r1, std::span<const double> r2, double F) {
    require_same_length(target, pbest, "current_to_pbest");
    require_same_length(target, r1, "current_to_pbest");
    require_same_length(target, r2, "current_to_pbest");
    Vector u(target.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        u[j] = target[j] + F * (pbest[j] - target[j]) + F * (r1[j] - r2[j]);
    }
    return u;
}

std::size_t pbest_count(double p, std::size_t size) {
    const auto top = static_cast<std::size_t>(std::ceil(p * static_cast<double>(size)));
    return std::clamp<std::size_t>(top, 1, size);
}

Vector mutate_current_to_pbest(std::span<const Vector> pop, std::span<const Vector> archive, std::size_t i,
                               std::span<const double> key, double F, double p, Rng& rng) {
    require_population(pop.size(), 3, "mutate_current_to_pbest");
    if (key.size() != pop.size()) {
        throw std::invalid_argument("mutate_current_to_pbest: key must rank every member");
    }
    const std::size_t top = pbest_count(p, pop.size());
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(top - 1), order.end(),
                     [&](std::size_t a, std::size_t b) { return key[a] < key[b] || (key[a] == key[b] && a < b); });
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(top),
              [&](std::size_t a, std::size_t b) { return key[a] < key[b] || (key[a] == key[b] && a < b); });
    const std::size_t pbest = order[rng.below(top)];

    std::size_t r1 = i;
    while (r1 == i) {
        r1 = rng.below(pop.size());
    }
    const std::size_t combined = pop.size() + archive.size();
    std::size_t r2 = i;
    while (r2 == i || r2 == r1) {
        r2 = rng.below(combined);
    }
    const Vector& x_r2 = r2 < pop.size() ? pop[r2] : archive[r2 - pop.size()];
    return current_to_pbest(pop[i], pop[pbest], pop[r1], x_r2, F);
}

std::array<std::size_t, 3> randrl_order(std::array<std::size_t, 3> drawn, std::span<const double> key) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < 3; ++k) {
        if (key[drawn[k]] < key[drawn[best]]) {
            best = k;
        }
    }
    std::array<std::size_t, 3> out{drawn[best], 0, 0};
    std::size_t slot = 1;
    for (std::size_t k = 0; k < 3; ++k) {
        if (k != best) {
            out[slot++] = drawn[k];
        }
    }
    return out;
}

Vector mutate_randrl_1(std::span<const Vector> pop, std::size_t i, double F, std::span<const double> key,
                       Rng& rng) {
    require_population(pop.size(), 4, "mutate_randrl_1");
    if (key.size() != pop.size()) {
        throw std::invalid_argument("mutate_randrl_1: key must rank every member");
    }
    const auto r = distinct_indices(pop.size(), i, 3, rng);
    const auto o = randrl_order({r[0], r[1], r[2]}, key);
    return rand_1(pop[o[0]], pop[o[1]], pop[o[2]], F);
}

Vector crossover_binomial(std::span<const double> target, std::span<const double> mutant, double CR,
                          std::span<const double> draws, std::size_t j_rand) {
    require_same_length(target, mutant, "crossover_binomial");
    require_same_length(target, draws, "crossover_binomial");
    Vector trial(target.begin(), target.end());
    for (std::size_t j = 0; j < trial.size(); ++j) {
        if (draws[j] <= CR || j == j_rand) {
            trial[j] = mutant[j];
        }
    }
    return trial;
}

Vector crossover_binomial(std::span<const double> target, std::span<const double> mutant, double CR, Rng& rng) {
    require_same_length(target, mutant, "crossover_binomial");
    const std::size_t j_rand = rng.below(target.size());
    Vector draws(target.size());
    for (double& d : draws) {
        d = rng.uniform();
    }
    return crossover_binomial(target, mutant, CR, draws, j_rand);
}

Vector crossover_exponential(std::span<const double> target, std::span<const double> mutant, std::size_t start,
                             std::size_t length) {
    require_same_length(target, mutant, "crossover_exponential");
    const std::size_t d = target.size();
    Vector trial(target.begin(), target.end());
    for (std::size_t k = 0; k < std::min(length, d); ++k) {
        const std::size_t j = (start + k) % d;
        trial[j] = mutant[j];
    }
    return trial;
}

std::size_t exponential_run_length(double CR, std::size_t dimension, Rng& rng) {
    std::size_t length = 0;
    while (length + 1 < dimension && rng.uniform() <= CR) {
        ++length;
    }
    return length;
}

Vector crossover_exponential(std::span<const double> target, std::span<const double> mutant, double CR, Rng& rng) {
    require_same_length(target, mutant, "crossover_exponential");
    const std::size_t start = rng.below(target.size());
    const std::size_t length = exponential_run_length(CR, target.size(), rng);
    return crossover_exponential(target, mutant, start, length);
}

std::vector<Vector> pca_mutation(std::span<const Vector> pop, const std::vector<Vector>& perturbation) {
    require_population(pop.size(), 2, "pca_mutation");
    if (perturbation.size() != pop.size()) {
        throw std::invalid_argument("pca_mutation: one perturbation vector per individual required");
    }
    const std::size_t n = pop.front().size();
    const PcaBasis basis = fit_pca(pop, n);

    std::vector<Vector> children;
    children.reserve(pop.size());
    for (std::size_t j = 0; j < pop.size(); ++j) {
        if (perturbation[j].size() != n) {
            throw std::invalid_argument("pca_mutation: perturbation length must equal the dimension");
        }
        Vector y = basis.project(pop[j]);
        for (std::size_t i = 0; i < n; ++i) {
            const double sign = (y[i] > 0.0) - (y[i] < 0.0);
            y[i] = sign * std::sqrt(y[i] * y[i] + perturbation[j][i]);
        }
        children.push_back(basis.reconstruct(y));
    }
    return children;
}

std::vector<Vector> draw_pca_perturbation(std::size_t individuals, std::size_t dimension, double c_max, Rng& rng) {
    std::vector<Vector> c(individuals, Vector(dimension));
    for (auto& column : c) {
        for (double& v : column) {
            v = c_max * rng.uniform();
        }
        std::sort(column.begin(), column.end());
    }
    return c;
}

std::vector<Vector> pca_mutation(std::span<const Vector> pop, double c_max, Rng& rng) {
    require_population(pop.size(), 2, "pca_mutation");
    if (!(c_max >= 0.0)) {
        throw std::invalid_argument("pca_mutation: c_max must be non-negative");
    }
    return pca_mutation(pop, draw_pca_perturbation(pop.size(), pop.front().size(), c_max, rng));
}

Vector clamp_to_box(Vector x, std::span<const double> lower, std::span<const double> upper) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = std::clamp(x[j], lower[j], upper[j]);
    }
    return x;
}

Vector reflect_into_box(Vector x, std::span<const double> lower, std::span<const double> upper) {
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] >= lower[j] && x[j] <= upper[j]) {
            continue;
        }
        if (!std::isfinite(x[j])) {
            x[j] = std::clamp(x[j], lower[j], upper[j]);
            continue;
        }
        // Mirror repeatedly: fold onto a period of twice the width.
        const double width = upper[j] - lower[j];
        double offset = std::fmod(x[j] - lower[j], 2.0 * width);
        if (offset < 0.0) {
            offset += 2.0 * width;
        }
        x[j] = offset <= width ? lower[j] + offset : upper[j] - (offset - width);
        x[j] = std::clamp(x[j], lower[j], upper[j]);
    }
    return x;
}

Vector repair_bounds(Vector x, const Problem& problem, BoundRepair mode, const std::function<Vector()>& regenerate) {
    if (problem.in_bounds(x)) {
        return x;
    }
    switch (mode) {
    case BoundRepair::clamp:
        return clamp_to_box(std::move(x), problem.lower(), problem.upper());
    case BoundRepair::reflect:
        return reflect_into_box(std::move(x), problem.lower(), problem.upper());
    case BoundRepair::resample:
        if (regenerate) {
            for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
                x = regenerate();
                if (problem.in_bounds(x)) {
                    return x;
                }
            }
        }
        return clamp_to_box(std::move(x), problem.lower(), problem.upper());
    }
    return x;
}

} // namespace pcade::de
