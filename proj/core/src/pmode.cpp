#include "pcade/pmode.hpp"

#include "pcade/pca.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace pcade {

bool dominates(const BiObjective& a, const BiObjective& b) {
    return a.f <= b.f && a.v <= b.v && (a.f < b.f || a.v < b.v);
}

std::vector<std::size_t> nondominated(std::span<const BiObjective> points) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
            dominated = (j != i) && dominates(points[j], points[i]);
        }
        if (!dominated) {
            out.push_back(i);
        }
    }
    return out;
}

BiObjective bi_objective(const Evaluation& eval) {
    return {eval.ordering_f(), eval.violation};
}

void PmodeConfig::validate(std::size_t dimension) const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("PMODE config: " + what); };
    if (dimension == 0) {
        fail("problem dimension must be positive");
    }
    if (subpopulation_size < 4) {
        fail("subpopulation size must be at least 4 for DE/rand/1");
    }
    if (subpopulation_size > population_size) {
        fail("subpopulation size exceeds population size");
    }
    if (!(0.0 <= f_min && f_min <= f_max && f_max <= 2.0)) {
        fail("F range must satisfy 0 <= f_min <= f_max <= 2");
    }
    if (!(0.0 <= cr_min && cr_min <= cr_max && cr_max <= 1.0)) {
        fail("CR range must satisfy 0 <= cr_min <= cr_max <= 1");
    }
    if (!(pca_probability >= 0.0 && pca_probability <= 1.0)) {
        fail("PCA probability must lie in [0, 1]");
    }
    if (replacement_interval == 0) {
        fail("replacement interval must be positive");
    }
    if (max_evaluations < population_size + subpopulation_size) {
        fail("budget of " + std::to_string(max_evaluations) + " evaluations is smaller than one generation (" +
             std::to_string(population_size + subpopulation_size) + ")");
    }
}

std::vector<std::size_t> replace_with_archive(std::vector<Individual>& population,
                                              const std::vector<Individual>& archive, Rng& rng) {
    std::optional<std::size_t> protect;
    for (std::size_t i = 0; i < population.size(); ++i) {
        const auto& e = population[i].eval;
        if (e.feasible && (!protect || e.ordering_f() < population[*protect].eval.ordering_f())) {
            protect = i;
        }
    }
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (!protect || i != *protect) {
            candidates.push_back(i);
        }
    }
    const std::size_t count = std::min(archive.size(), candidates.size());
    const auto picks = rng.sample_without_replacement(candidates.size(), count);
    std::vector<std::size_t> replaced;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t slot = candidates[picks[k]];
        population[slot] = archive[k];
        replaced.push_back(slot);
    }
    return replaced;
}

RunRecord run_pmode(const Problem& problem, const PmodeConfig& config, std::uint64_t seed,
                    const GenerationObserver& observer) {
    const std::size_t n = problem.dimension();
    config.validate(n);
    const std::size_t mu = config.population_size;
    const std::size_t lambda = config.subpopulation_size;
    const std::size_t retained = effective_retained_dims(config.retained_dims, n);

    Rng rng(seed);
    BestTracker tracker(config.trajectory_stride);

    std::vector<Individual> pop;
    pop.reserve(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        pop.push_back(make_individual(problem, random_point(problem, rng)));
        tracker.offer(pop.back());
    }
    std::size_t fes = mu;
    tracker.checkpoint(fes);

    std::vector<Individual> archive;
    std::size_t generation = 0;
    std::vector<Vector> q_points(lambda);
    std::vector<Individual> children(lambda);
    std::vector<BiObjective> child_obj(lambda);
    std::vector<BiObjective> q_obj(lambda);

    while (fes + lambda <= config.max_evaluations) {
        ++generation;
        const auto q_index = rng.sample_without_replacement(mu, lambda);
        for (std::size_t i = 0; i < lambda; ++i) {
            q_points[i] = pop[q_index[i]].x;
            q_obj[i] = bi_objective(pop[q_index[i]].eval);
        }
        const double F = rng.uniform(config.f_min, config.f_max);
        const double CR = rng.uniform(config.cr_min, config.cr_max);

        std::optional<std::vector<Vector>> projected;
        for (std::size_t i = 0; i < lambda; ++i) {
            Vector trial;
            if (rng.uniform() < config.pca_probability) {
                if (!projected) {
                    projected = pca_projection(q_points, retained);
                    for (auto& p : *projected) {
                        p = de::repair_bounds(std::move(p), problem, config.projection_repair);
                    }
                }
                trial = (*projected)[i];
            } else {
                auto mutate = [&] { return de::mutate_rand_1(q_points, i, F, rng); };
                Vector mutant = de::repair_bounds(mutate(), problem, config.mutation_repair, mutate);
                trial = de::crossover_binomial(q_points[i], mutant, CR, rng);
            }
            children[i] = make_individual(problem, std::move(trial));
            child_obj[i] = bi_objective(children[i].eval);
            tracker.offer(children[i]);
        }
        fes += lambda;

        const auto front = nondominated(child_obj);
        std::vector<bool> replaced(lambda, false);
        for (std::size_t c : front) {
            std::vector<std::size_t> targets;
            for (std::size_t j = 0; j < lambda; ++j) {
                if (!replaced[j] && dominates(child_obj[c], q_obj[j])) {
                    targets.push_back(j);
                }
            }
            if (targets.empty()) {
                continue;
            }
            const std::size_t pick = targets[rng.below(targets.size())];
            pop[q_index[pick]] = children[c];
            replaced[pick] = true;
        }

        bool front_has_feasible = false;
        std::size_t least_violating = front.front();
        for (std::size_t c : front) {
            front_has_feasible = front_has_feasible || children[c].eval.feasible;
            if (child_obj[c].v < child_obj[least_violating].v) {
                least_violating = c;
            }
        }
        if (!front_has_feasible) {
            archive.push_back(children[least_violating]);
        }
        if (generation % config.replacement_interval == 0) {
            replace_with_archive(pop, archive, rng);
            archive.clear();
        }

        tracker.checkpoint(fes);
        if (observer) {
            observer({generation, fes, mu, archive.size(), 0, pop});
        }
    }

    tracker.checkpoint(fes, true);
    RunRecord record;
    record.problem = problem.name();
    record.dimension = n;
    record.algorithm = config.pca_probability > 0.0 ? "PMODE" : "CMODE";
    record.seed = seed;
    record.max_evaluations = config.max_evaluations;
    record.generations = generation;
    tracker.fill(record, fes);
    return record;
}

} // namespace pcade
