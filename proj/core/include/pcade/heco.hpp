#pragma once

#include "pcade/observer.hpp"
#include "pcade/operators.hpp"
#include "pcade/problem.hpp"
#include "pcade/run_record.hpp"
#include "pcade/strategy.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pcade {

/// Weights of subproblem i at generation t:
///   w1 = (t/T)^(20 i)
///   w2 = (i/lambda) (t/T)^(5 i/lambda)
///   w3 = (1 - i/lambda) (1 - t/T)^(5 i/lambda)
/// w1 multiplies e~, w2 the violation v, w3 the objective f.
struct WeightTriple {
    double w1 = 0.0;
    double w2 = 0.0;
    double w3 = 0.0;
};

/// i is 1-based in [1, lambda]; 0 <= t <= t_max.
WeightTriple subproblem_weights(std::size_t t, std::size_t t_max, std::size_t i, std::size_t lambda);

/// round(mu0 - (t / t_max) (mu0 - mu_final))
std::size_t population_size_at(std::size_t t, std::size_t t_max, std::size_t mu0, std::size_t mu_final);

/// Best fitness of a population: min f over feasible members, or min v when
/// none is feasible. Throws on an empty population.
double f_star(std::span<const Individual> population);

/// |f(x) - f_star|
double e_tilde(const Evaluation& eval, double fstar);

/// Max-min normalisation to [0, 1]; a constant group maps to all zeros.
/// +inf/NaN entries map to 1 and are excluded from the min/max.
std::vector<double> normalize_group(std::span<const double> values);

/// (e~, f, v) after normalisation.
struct TriObjective {
    double e = 0.0;
    double f = 0.0;
    double v = 0.0;
};

/// w1 e~ + w2 v + w3 f
double subproblem_fitness(const WeightTriple& w, const TriObjective& normalized);

/// HECO-PDE parameters; pca_probability = 0 gives HECO-DE.
struct HecoConfig {
    std::size_t subproblems = 12;          ///< lambda
    std::size_t initial_population = 0;    ///< mu_0; 0: 12 n
    std::size_t final_population = 0;      ///< mu_Tmax; 0: lambda
    StrategyConfig strategy{};             ///< K = 4, n_0 = 2, delta_q = 1/20, H = 5
    double pbest_fraction = 0.11;
    double pca_probability = 0.1;
    std::size_t retained_dims = 0;         ///< 0: min(5, n)
    std::size_t archive_factor = 4;
    std::size_t max_evaluations = 0;
    std::size_t trajectory_stride = 0;
    de::BoundRepair mutation_repair = de::BoundRepair::resample;
    de::BoundRepair projection_repair = de::BoundRepair::clamp;

    std::size_t mu0(std::size_t dimension) const {
        return initial_population ? initial_population : 12 * dimension;
    }
    std::size_t mu_final() const { return final_population ? final_population : subproblems; }
    /// (max_evaluations - mu_0) / lambda
    std::size_t generations(std::size_t dimension) const;

    void validate(std::size_t dimension) const;
};

/// Search strategies competing inside HECO-PDE, in StrategyAdaptation index order.
enum class HecoStrategy : std::size_t {
    pbest_binomial = 0,
    pbest_exponential = 1,
    randrl_binomial = 2,
    randrl_exponential = 3,
};

/// Removes random members until |population| == target, never the best one
/// (feasible first, then f, then v). Exposed for testing.
void shrink_population(std::vector<Individual>& population, std::size_t target, Rng& rng);

RunRecord run_heco(const Problem& problem, const HecoConfig& config, std::uint64_t seed,
                   const GenerationObserver& observer = {});

} // namespace pcade
