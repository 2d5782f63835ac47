#pragma once

#include <cstddef>
#include <span>

namespace pcade {

/// Exact paired signed-rank test on d = x - y. Zero differences are dropped;
/// tied |d| share their average rank.
struct WilcoxonResult {
    std::size_t n = 0;       ///< non-zero differences
    double w_plus = 0.0;     ///< rank sum of positive differences
    double p_less = 1.0;     ///< H1: x tends to be smaller than y
    double p_greater = 1.0;  ///< H1: x tends to be larger than y
};

/// Throws std::invalid_argument on unequal lengths or NaN differences.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y);

} // namespace pcade
