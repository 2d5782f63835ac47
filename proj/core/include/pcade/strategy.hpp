#pragma once

#include "pcade/rng.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pcade {

struct StrategyConfig {
    std::size_t strategies = 4;     ///< K
    std::size_t prior = 2;          ///< n_0
    double reset_threshold = 1.0 / 20.0;
    std::size_t memory_size = 5;    ///< H
    double initial_f = 0.5;
    double initial_cr = 0.5;
    double f_scale = 0.1;           ///< Cauchy scale for F
    double cr_scale = 0.1;          ///< normal std-dev for CR
};

struct ControlParams {
    double F = 0.5;
    double CR = 0.5;
};

/// Competition of K search strategies with success-count probabilities
///   q_k = (n_k + n_0) / sum_i (n_i + n_0)
/// and one pair of circular F/CR memories per strategy.
///
/// Memory update at the end of a generation uses the Lehmer mean
/// sum F^2 / sum F for F and the arithmetic mean for CR, one slot per
/// strategy that had successes. When some q_k drops below the reset
/// threshold all success counts return to zero.
class StrategyAdaptation {
public:
    explicit StrategyAdaptation(StrategyConfig config = {});

    const StrategyConfig& config() const { return config_; }
    std::size_t size() const { return config_.strategies; }

    double probability(std::size_t k) const;
    std::vector<double> probabilities() const;

    std::size_t select(Rng& rng) const;

    /// F ~ Cauchy(M_F[k][r], 0.1), redrawn while <= 0 and truncated to 1;
    /// CR ~ Normal(M_CR[k][r], 0.1) clamped to [0, 1]; r uniform in [0, H).
    ControlParams sample(std::size_t k, Rng& rng) const;

    void record_success(std::size_t k, ControlParams params);
    void end_generation();

    std::size_t success_count(std::size_t k) const { return counts_.at(k); }
    std::span<const double> memory_f(std::size_t k) const { return memory_f_.at(k); }
    std::span<const double> memory_cr(std::size_t k) const { return memory_cr_.at(k); }
    std::size_t cursor(std::size_t k) const { return cursor_.at(k); }
    std::span<const double> pending_f(std::size_t k) const { return success_f_.at(k); }
    std::span<const double> pending_cr(std::size_t k) const { return success_cr_.at(k); }

    /// Overwrites one memory slot (testing and warm starts).
    void set_memory(std::size_t k, std::size_t slot, ControlParams params);

private:
    StrategyConfig config_;
    std::vector<std::size_t> counts_;
    std::vector<std::vector<double>> memory_f_;
    std::vector<std::vector<double>> memory_cr_;
    std::vector<std::size_t> cursor_;
    std::vector<std::vector<double>> success_f_;
    std::vector<std::vector<double>> success_cr_;
};

/// sum v^2 / sum v; 0 for an empty or all-zero input.
double lehmer_mean(std::span<const double> values);

} // namespace pcade
