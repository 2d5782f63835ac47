#include "pcade/heco.hpp"

#include "pcade/pca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace pcade {

WeightTriple subproblem_weights(std::size_t t, std::size_t t_max, std::size_t i, std::size_t lambda) {
    if (t_max == 0 || t > t_max) {
        throw std::invalid_argument("subproblem_weights: need 0 <= t <= t_max with t_max > 0");
    }
    if (i < 1 || i > lambda) {
        throw std::invalid_argument("subproblem_weights: subproblem index outside [1, lambda]");
    }
    const double progress = static_cast<double>(t) / static_cast<double>(t_max);
    const double share = static_cast<double>(i) / static_cast<double>(lambda);
    const double exponent = 5.0 * share;
    return {
        std::pow(progress, 20.0 * static_cast<double>(i)),
        share * std::pow(progress, exponent),
        (1.0 - share) * std::pow(1.0 - progress, exponent),
    };
}

std::size_t population_size_at(std::size_t t, std::size_t t_max, std::size_t mu0, std::size_t mu_final) {
    if (t_max == 0 || t > t_max) {
        throw std::invalid_argument("population_size_at: need 0 <= t <= t_max with t_max > 0");
    }
    const double progress = static_cast<double>(t) / static_cast<double>(t_max);
    const double size = static_cast<double>(mu0) - progress * (static_cast<double>(mu0) - static_cast<double>(mu_final));
    return static_cast<std::size_t>(std::llround(size));
}

double f_star(std::span<const Individual> population) {
    if (population.empty()) {
        throw std::invalid_argument("f_star: empty population");
    }
    double best_f = std::numeric_limits<double>::infinity();
    double best_v = std::numeric_limits<double>::infinity();
    bool any_feasible = false;
    for (const auto& ind : population) {
        if (ind.eval.feasible) {
            any_feasible = true;
            best_f = std::min(best_f, ind.eval.ordering_f());
        } else {
            best_v = std::min(best_v, ind.eval.violation);
        }
    }
    return any_feasible ? best_f : best_v;
}

double e_tilde(const Evaluation& eval, double fstar) {
    return std::abs(eval.ordering_f() - fstar);
}

std::vector<double> normalize_group(std::span<const double> values) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : values) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    std::vector<double> out(values.size());
    const double range = hi - lo;
    for (std::size_t k = 0; k < values.size(); ++k) {
        const double v = values[k];
        if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
            out[k] = 1.0;
        } else if (v == -std::numeric_limits<double>::infinity()) {
            out[k] = 0.0;
        } else {
            out[k] = range > 0.0 ? (v - lo) / range : 0.0;
        }
    }
    return out;
}

double subproblem_fitness(const WeightTriple& w, const TriObjective& normalized) {
    return w.w1 * normalized.e + w.w2 * normalized.v + w.w3 * normalized.f;
}

std::size_t HecoConfig::generations(std::size_t dimension) const {
    const std::size_t mu = mu0(dimension);
    return max_evaluations > mu ? (max_evaluations - mu) / subproblems : 0;
}

void HecoConfig::validate(std::size_t dimension) const {
    auto fail = [](const std::string& what) { throw std::invalid_argument("HECO config: " + what); };
    if (dimension == 0) {
        fail("problem dimension must be positive");
    }
    if (subproblems < 4) {
        fail("lambda must be at least 4 (randrl/1 draws three distinct partners)");
    }
    if (mu_final() > mu0(dimension)) {
        fail("final population exceeds initial population");
    }
    if (subproblems > mu_final()) {
        fail("lambda exceeds the final population size");
    }
    if (strategy.strategies != 4) {
        fail("exactly four strategies (2 mutations x 2 crossovers) are supported");
    }
    if (!(pbest_fraction > 0.0 && pbest_fraction <= 1.0)) {
        fail("pbest fraction must lie in (0, 1]");
    }
    if (!(pca_probability >= 0.0 && pca_probability <= 1.0)) {
        fail("PCA probability must lie in [0, 1]");
    }
    if (archive_factor == 0) {
        fail("archive factor must be positive");
    }
    if (generations(dimension) == 0) {
        fail("budget of " + std::to_string(max_evaluations) + " evaluations leaves no generation after the initial " +
             std::to_string(mu0(dimension)));
    }
}

namespace {

struct RawTri {
    double e;
    double f;
    double v;
};

RawTri raw_tri(const Evaluation& eval, double fstar) {
    return {e_tilde(eval, fstar), eval.ordering_f(), eval.violation};
}

std::size_t best_index(std::span<const Individual> pop) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pop.size(); ++k) {
        if (better_solution(pop[k].eval, pop[best].eval)) {
            best = k;
        }
    }
    return best;
}

/// Removes `count` random members of `items`, never index `keep` (if given).
template <typename T>
void remove_random(std::vector<T>& items, std::size_t count, std::optional<std::size_t> keep, Rng& rng) {
    std::vector<std::size_t> candidates;
    candidates.reserve(items.size());
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (!keep || k != *keep) {
            candidates.push_back(k);
        }
    }
    count = std::min(count, candidates.size());
    const auto picks = rng.sample_without_replacement(candidates.size(), count);
    std::vector<bool> drop(items.size(), false);
    for (std::size_t p : picks) {
        drop[candidates[p]] = true;
    }
    std::size_t write = 0;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (!drop[k]) {
            if (write != k) {
                items[write] = std::move(items[k]);
            }
            ++write;
        }
    }
    items.resize(write);
}

} // namespace

void shrink_population(std::vector<Individual>& population, std::size_t target, Rng& rng) {
    if (population.size() > target) {
        remove_random(population, population.size() - target, best_index(population), rng);
    }
}

RunRecord run_heco(const Problem& problem, const HecoConfig& config, std::uint64_t seed,
                   const GenerationObserver& observer) {
    const std::size_t n = problem.dimension();
    config.validate(n);
    const std::size_t lambda = config.subproblems;
    const std::size_t mu0 = config.mu0(n);
    const std::size_t mu_final = config.mu_final();
    const std::size_t t_max = config.generations(n);
    const std::size_t retained = effective_retained_dims(config.retained_dims, n);

    Rng rng(seed);
    BestTracker tracker(config.trajectory_stride);
    StrategyAdaptation strategies(config.strategy);

    std::vector<Individual> pop;
    pop.reserve(mu0);
    for (std::size_t k = 0; k < mu0; ++k) {
        pop.push_back(make_individual(problem, random_point(problem, rng)));
        tracker.offer(pop.back());
    }
    std::size_t fes = mu0;
    tracker.checkpoint(fes);

    std::vector<Vector> archive;
    std::vector<Vector> pop_x;
    std::vector<WeightTriple> weights(lambda);
    std::vector<double> key;
    std::vector<double> col_e, col_f, col_v;
    std::vector<Vector> q_points(lambda);
    std::vector<RawTri> q_raw(lambda);
    std::vector<std::optional<Individual>> children(lambda);

    std::size_t t = 0;
    while (t < t_max) {
        for (std::size_t i = 0; i < lambda; ++i) {
            weights[i] = subproblem_weights(t, t_max, i + 1, lambda);
        }

        const double fstar = f_star(pop);
        const std::size_t size = pop.size();
        pop_x.resize(size);
        col_e.resize(size);
        col_f.resize(size);
        col_v.resize(size);
        for (std::size_t k = 0; k < size; ++k) {
            pop_x[k] = pop[k].x;
            const RawTri r = raw_tri(pop[k].eval, fstar);
            col_e[k] = r.e;
            col_f[k] = r.f;
            col_v[k] = r.v;
        }
        // Population-wide normalised objectives rank pbest and randrl partners.
        const auto pop_e = normalize_group(col_e);
        const auto pop_f = normalize_group(col_f);
        const auto pop_v = normalize_group(col_v);
        key.resize(size);

        const auto q_index = rng.sample_without_replacement(size, lambda);
        for (std::size_t i = 0; i < lambda; ++i) {
            q_points[i] = pop[q_index[i]].x;
            q_raw[i] = raw_tri(pop[q_index[i]].eval, fstar);
            children[i].reset();
        }

        std::optional<std::vector<Vector>> projected;
        std::vector<double> group_e(lambda + 1), group_f(lambda + 1), group_v(lambda + 1);
        for (std::size_t i = 0; i < lambda; ++i) {
            const WeightTriple& w = weights[i];
            Vector trial;
            std::optional<std::size_t> strategy;
            ControlParams params;

            if (rng.uniform() < config.pca_probability) {
                if (!projected) {
                    projected = pca_projection(q_points, retained);
                    for (auto& p : *projected) {
                        p = de::repair_bounds(std::move(p), problem, config.projection_repair);
                    }
                }
                trial = (*projected)[i];
            } else {
                strategy = strategies.select(rng);
                params = strategies.sample(*strategy, rng);
                for (std::size_t k = 0; k < size; ++k) {
                    key[k] = subproblem_fitness(w, {pop_e[k], pop_f[k], pop_v[k]});
                }
                const auto s = static_cast<HecoStrategy>(*strategy);
                const std::size_t base = q_index[i];
                auto mutate = [&]() -> Vector {
                    if (s == HecoStrategy::pbest_binomial || s == HecoStrategy::pbest_exponential) {
                        return de::mutate_current_to_pbest(pop_x, archive, base, key, params.F,
                                                           config.pbest_fraction, rng);
                    }
                    return de::mutate_randrl_1(pop_x, base, params.F, key, rng);
                };
                Vector mutant = de::repair_bounds(mutate(), problem, config.mutation_repair, mutate);
                if (s == HecoStrategy::pbest_binomial || s == HecoStrategy::randrl_binomial) {
                    trial = de::crossover_binomial(q_points[i], mutant, params.CR, rng);
                } else {
                    trial = de::crossover_exponential(q_points[i], mutant, params.CR, rng);
                }
            }

            Individual y = make_individual(problem, std::move(trial));
            ++fes;
            tracker.offer(y);

            // Q' = Q plus the trial; normalise each objective over Q'.
            for (std::size_t k = 0; k < lambda; ++k) {
                group_e[k] = q_raw[k].e;
                group_f[k] = q_raw[k].f;
                group_v[k] = q_raw[k].v;
            }
            const RawTri ry = raw_tri(y.eval, fstar);
            group_e[lambda] = ry.e;
            group_f[lambda] = ry.f;
            group_v[lambda] = ry.v;
            const auto ne = normalize_group(group_e);
            const auto nf = normalize_group(group_f);
            const auto nv = normalize_group(group_v);

            const double fit_trial = subproblem_fitness(w, {ne[lambda], nf[lambda], nv[lambda]});
            const double fit_parent = subproblem_fitness(w, {ne[i], nf[i], nv[i]});
            if (fit_trial < fit_parent) {
                archive.push_back(q_points[i]);
                children[i] = std::move(y);
                if (strategy) {
                    strategies.record_success(*strategy, params);
                }
            }
        }
        strategies.end_generation();

        // Successful trials take their parent's slot; unimproved parents stay.
        for (std::size_t i = 0; i < lambda; ++i) {
            if (children[i]) {
                pop[q_index[i]] = std::move(*children[i]);
            }
        }

        ++t;
        const std::size_t target = population_size_at(t, t_max, mu0, mu_final);
        shrink_population(pop, target, rng);
        const std::size_t archive_cap = config.archive_factor * target;
        if (archive.size() > archive_cap) {
            remove_random(archive, archive.size() - archive_cap, std::nullopt, rng);
        }

        tracker.checkpoint(fes);
        if (observer) {
            observer({t, fes, target, archive.size(), archive_cap, pop});
        }
    }

    tracker.checkpoint(fes, true);
    RunRecord record;
    record.problem = problem.name();
    record.dimension = n;
    record.algorithm = config.pca_probability > 0.0 ? "HECO-PDE" : "HECO-DE";
    record.seed = seed;
    record.max_evaluations = config.max_evaluations;
    record.generations = t;
    tracker.fill(record, fes);
    return record;
}

} // namespace pcade
