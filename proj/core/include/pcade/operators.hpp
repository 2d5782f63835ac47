#pragma once

#include "pcade/problem.hpp"
#include "pcade/rng.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

/// Differential-evolution variation operators.
///
/// Each operator comes in two forms: a deterministic core that takes every
/// random choice as an argument (used for replay and hand-traced checks), and
/// an Rng-driven wrapper that makes those choices and delegates to the core.
namespace pcade::de {

class PopulationTooSmall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Draws `count` distinct indices from [0, size) that all differ from `exclude`.
std::vector<std::size_t> distinct_indices(std::size_t size, std::size_t exclude, std::size_t count, Rng& rng);

// ---------------------------------------------------------------- mutation

/// base + F (a - b)
Vector rand_1(std::span<const double> base, std::span<const double> a, std::span<const double> b, double F);

/// DE/rand/1: x_r1 + F (x_r2 - x_r3) with r1, r2, r3 distinct and != i.
Vector mutate_rand_1(std::span<const Vector> pop, std::size_t i, double F, Rng& rng);

/// x_i + F (x_pbest - x_i) + F (x_r1 - x_r2)
Vector current_to_pbest(std::span<const double> target, std::span<const double> pbest,
                        std::span<const double> r1, std::span<const double> r2, double F);

/// Size of the "top 100p%" set: ceil(p * size), at least 1.
std::size_t pbest_count(double p, std::size_t size);

/// current-to-pbest/1. `key` ranks `pop` (lower is better); x_pbest is uniform
/// over the best pbest_count(p, |pop|) members, r1 is uniform over pop \ {i},
/// r2 uniform over (pop + archive) minus {i, r1}.
Vector mutate_current_to_pbest(std::span<const Vector> pop, std::span<const Vector> archive, std::size_t i,
                               std::span<const double> key, double F, double p, Rng& rng);

/// Orders three drawn indices for randrl/1: the best by `key` first, the
/// other two in their original draw order. Ties keep draw order.
std::array<std::size_t, 3> randrl_order(std::array<std::size_t, 3> drawn, std::span<const double> key);

/// randrl/1: x_r1* + F (x_r2* - x_r3*) with r1* the best of three distinct draws.
Vector mutate_randrl_1(std::span<const Vector> pop, std::size_t i, double F, std::span<const double> key,
                       Rng& rng);

// --------------------------------------------------------------- crossover

/// trial[j] = mutant[j] if draws[j] <= CR or j == j_rand, else target[j].
Vector crossover_binomial(std::span<const double> target, std::span<const double> mutant, double CR,
                          std::span<const double> draws, std::size_t j_rand);
Vector crossover_binomial(std::span<const double> target, std::span<const double> mutant, double CR, Rng& rng);

/// Copies mutant over the cyclic window start, start+1, ..., start+length-1 (mod D).
Vector crossover_exponential(std::span<const double> target, std::span<const double> mutant, std::size_t start,
                             std::size_t length);
/// Run length by repeated Bernoulli(CR) trials, capped at D - 1.
std::size_t exponential_run_length(double CR, std::size_t dimension, Rng& rng);
Vector crossover_exponential(std::span<const double> target, std::span<const double> mutant, double CR, Rng& rng);

// ---------------------------------------------------------- PCA mutation

/// Baseline PCA-mutation on a whole population (columns are individuals):
/// full-dimension PCA, y = V^T (x - m), squared coordinates perturbed by
/// c[i][j] (non-decreasing in the axis index i for each individual j), signs
/// restored, x' = V y' + m.
///
/// `perturbation[j]` holds the n perturbations for individual j, in axis order.
std::vector<Vector> pca_mutation(std::span<const Vector> pop, const std::vector<Vector>& perturbation);

/// Draws perturbation[j] as n sorted uniforms on [0, c_max] per individual.
std::vector<Vector> draw_pca_perturbation(std::size_t individuals, std::size_t dimension, double c_max, Rng& rng);
std::vector<Vector> pca_mutation(std::span<const Vector> pop, double c_max, Rng& rng);

// ----------------------------------------------------------- bound repair

enum class BoundRepair {
    resample, ///< regenerate with the producing operator, up to kMaxResamples, then clamp
    clamp,
    reflect,
};

inline constexpr int kMaxResamples = 20;

Vector clamp_to_box(Vector x, std::span<const double> lower, std::span<const double> upper);
Vector reflect_into_box(Vector x, std::span<const double> lower, std::span<const double> upper);

/// Returns x when already inside the box. For BoundRepair::resample,
/// `regenerate` is called until it yields an in-box vector; without a
/// generator (or after the guard) the last candidate is clamped.
Vector repair_bounds(Vector x, const Problem& problem, BoundRepair mode,
                     const std::function<Vector()>& regenerate = {});

} // namespace pcade::de
