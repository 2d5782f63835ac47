#pragma once

#include "pcade/observer.hpp"
#include "pcade/operators.hpp"
#include "pcade/problem.hpp"
#include "pcade/run_record.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pcade {

/// Objective pair (f, v) used by the non-dominance model.
struct BiObjective {
    double f = 0.0;
    double v = 0.0;
};

/// a.f <= b.f and a.v <= b.v with at least one strict inequality.
bool dominates(const BiObjective& a, const BiObjective& b);

/// Indices of the members not dominated by any other member, ascending.
std::vector<std::size_t> nondominated(std::span<const BiObjective> points);

BiObjective bi_objective(const Evaluation& eval);

/// PMODE parameters; pca_probability = 0 gives CMODE.
struct PmodeConfig {
    std::size_t population_size = 180;   ///< mu
    std::size_t subpopulation_size = 8;  ///< lambda
    double f_min = 0.5;
    double f_max = 0.6;
    double cr_min = 0.9;
    double cr_max = 0.95;
    std::size_t replacement_interval = 22;
    double pca_probability = 0.1;
    std::size_t retained_dims = 0;       ///< 0: min(5, n)
    std::size_t max_evaluations = 0;
    std::size_t trajectory_stride = 0;   ///< 0 disables checkpoints
    de::BoundRepair mutation_repair = de::BoundRepair::resample;
    de::BoundRepair projection_repair = de::BoundRepair::clamp;

    /// Throws std::invalid_argument on inconsistent settings.
    void validate(std::size_t dimension) const;
};

/// One PMODE run. Evaluations used are exactly mu + generations * lambda and
/// never exceed max_evaluations.
RunRecord run_pmode(const Problem& problem, const PmodeConfig& config, std::uint64_t seed,
                    const GenerationObserver& observer = {});

/// Archive re-injection: each archived solution overwrites a distinct random
/// member of `population`, never the best feasible one. Returns the replaced
/// indices. Exposed for testing.
std::vector<std::size_t> replace_with_archive(std::vector<Individual>& population,
                                              const std::vector<Individual>& archive, Rng& rng);

} // namespace pcade
