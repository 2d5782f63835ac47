#include "pcade/strategy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pcade {

StrategyAdaptation::StrategyAdaptation(StrategyConfig config)
    : config_(config),
      counts_(config.strategies, 0),
      memory_f_(config.strategies, std::vector<double>(config.memory_size, config.initial_f)),
      memory_cr_(config.strategies, std::vector<double>(config.memory_size, config.initial_cr)),
      cursor_(config.strategies, 0),
      success_f_(config.strategies),
      success_cr_(config.strategies) {
    if (config_.strategies == 0) {
        throw std::invalid_argument("StrategyAdaptation: need at least one strategy");
    }
    if (config_.prior == 0) {
        throw std::invalid_argument("StrategyAdaptation: n_0 must be positive");
    }
    if (config_.memory_size == 0) {
        throw std::invalid_argument("StrategyAdaptation: memory size must be positive");
    }
}

double StrategyAdaptation::probability(std::size_t k) const {
    const double prior = static_cast<double>(config_.prior);
    double total = 0.0;
    for (std::size_t c : counts_) {
        total += static_cast<double>(c) + prior;
    }
    return (static_cast<double>(counts_.at(k)) + prior) / total;
}

std::vector<double> StrategyAdaptation::probabilities() const {
    std::vector<double> q(size());
    for (std::size_t k = 0; k < q.size(); ++k) {
        q[k] = probability(k);
    }
    return q;
}

std::size_t StrategyAdaptation::select(Rng& rng) const {
    const auto q = probabilities();
    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
        acc += q[k];
        if (u < acc) {
            return k;
        }
    }
    return q.size() - 1;
}

ControlParams StrategyAdaptation::sample(std::size_t k, Rng& rng) const {
    const std::size_t slot = rng.below(config_.memory_size);
    const double mf = memory_f_.at(k)[slot];
    const double mcr = memory_cr_.at(k)[slot];

    double F = 0.0;
    do {
        F = rng.cauchy(mf, config_.f_scale);
    } while (!(F > 0.0));
    F = std::min(F, 1.0);

    const double CR = std::clamp(rng.normal(mcr, config_.cr_scale), 0.0, 1.0);
    return {F, CR};
}

void StrategyAdaptation::record_success(std::size_t k, ControlParams params) {
    ++counts_.at(k);
    success_f_.at(k).push_back(params.F);
    success_cr_.at(k).push_back(params.CR);
}

void StrategyAdaptation::end_generation() {
    for (std::size_t k = 0; k < size(); ++k) {
        if (success_f_[k].empty()) {
            continue;
        }
        const double f = lehmer_mean(success_f_[k]);
        const double cr = std::accumulate(success_cr_[k].begin(), success_cr_[k].end(), 0.0) /
                          static_cast<double>(success_cr_[k].size());
        memory_f_[k][cursor_[k]] = std::clamp(f, 0.0, 1.0);
        memory_cr_[k][cursor_[k]] = std::clamp(cr, 0.0, 1.0);
        cursor_[k] = (cursor_[k] + 1) % config_.memory_size;
        success_f_[k].clear();
        success_cr_[k].clear();
    }
    const auto q = probabilities();
    if (*std::min_element(q.begin(), q.end()) < config_.reset_threshold) {
        std::fill(counts_.begin(), counts_.end(), 0);
    }
}

void StrategyAdaptation::set_memory(std::size_t k, std::size_t slot, ControlParams params) {
    memory_f_.at(k).at(slot) = params.F;
    memory_cr_.at(k).at(slot) = params.CR;
}

double lehmer_mean(std::span<const double> values) {
    double num = 0.0;
    double den = 0.0;
    for (double v : values) {
        num += v * v;
        den += v;
    }
    return den == 0.0 ? 0.0 : num / den;
}

} // namespace pcade
