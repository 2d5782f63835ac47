#pragma once

#include "pcade/stats.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pcade {

/// Competition ranks (1, 1, 3, ...) under a strict weak order `less`.
template <typename T, typename Less>
std::vector<std::size_t> competition_rank(std::span<const T> items, Less less) {
    std::vector<std::size_t> ranks(items.size(), 1);
    for (std::size_t a = 0; a < items.size(); ++a) {
        for (std::size_t b = 0; b < items.size(); ++b) {
            if (less(items[b], items[a])) {
                ++ranks[a];
            }
        }
    }
    return ranks;
}

/// Key: higher SR, then lower vio, then lower mean f.
std::vector<std::size_t> rank_by_mean(std::span<const ProblemStats> per_algorithm);

/// Key: feasible median first, then median f (feasible) or median v (infeasible).
std::vector<std::size_t> rank_by_median(std::span<const ProblemStats> per_algorithm);

/// ranks[problem][algorithm]
struct RankTable {
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    std::vector<std::vector<std::size_t>> mean_ranks;
    std::vector<std::vector<std::size_t>> median_ranks;
    std::vector<std::size_t> totals; ///< per algorithm

    std::size_t mean_sum(std::size_t algorithm) const;
    std::size_t median_sum(std::size_t algorithm) const;
};

/// Per-algorithm sums of both rank tables; each table is ranks[problem][algorithm].
/// Throws when the tables differ in shape.
std::vector<std::size_t> total_rank(const std::vector<std::vector<std::size_t>>& mean_ranks,
                                    const std::vector<std::vector<std::size_t>>& median_ranks);

/// Groups stats by problem and ranks every algorithm on every problem.
/// Throws unless every problem has stats for the same set of algorithms.
RankTable build_rank_table(std::span<const ProblemStats> stats);

} // namespace pcade
