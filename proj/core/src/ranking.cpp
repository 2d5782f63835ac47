#include "pcade/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace pcade {

namespace {

double nan_last(double x) {
    return std::isnan(x) ? std::numeric_limits<double>::infinity() : x;
}

bool mean_less(const ProblemStats& a, const ProblemStats& b) {
    if (a.sr != b.sr) {
        return a.sr > b.sr;
    }
    if (a.vio != b.vio) {
        return a.vio < b.vio;
    }
    return nan_last(a.mean) < nan_last(b.mean);
}

bool median_less(const ProblemStats& a, const ProblemStats& b) {
    if (a.median_feasible != b.median_feasible) {
        return a.median_feasible;
    }
    return a.median_feasible ? nan_last(a.median_f) < nan_last(b.median_f) : a.median_v < b.median_v;
}

std::size_t column_sum(const std::vector<std::vector<std::size_t>>& table, std::size_t column) {
    std::size_t sum = 0;
    for (const auto& row : table) {
        sum += row.at(column);
    }
    return sum;
}

} // namespace

std::vector<std::size_t> rank_by_mean(std::span<const ProblemStats> per_algorithm) {
    return competition_rank(per_algorithm, mean_less);
}

std::vector<std::size_t> rank_by_median(std::span<const ProblemStats> per_algorithm) {
    return competition_rank(per_algorithm, median_less);
}

std::size_t RankTable::mean_sum(std::size_t algorithm) const { return column_sum(mean_ranks, algorithm); }
std::size_t RankTable::median_sum(std::size_t algorithm) const { return column_sum(median_ranks, algorithm); }

std::vector<std::size_t> total_rank(const std::vector<std::vector<std::size_t>>& mean_ranks,
                                    const std::vector<std::vector<std::size_t>>& median_ranks) {
    if (mean_ranks.size() != median_ranks.size()) {
        throw std::invalid_argument("total_rank: tables cover different numbers of problems");
    }
    if (mean_ranks.empty()) {
        return {};
    }
    const std::size_t algorithms = mean_ranks.front().size();
    std::vector<std::size_t> totals(algorithms, 0);
    for (std::size_t p = 0; p < mean_ranks.size(); ++p) {
        if (mean_ranks[p].size() != algorithms || median_ranks[p].size() != algorithms) {
            throw std::invalid_argument("total_rank: tables cover different algorithms");
        }
        for (std::size_t a = 0; a < algorithms; ++a) {
            totals[a] += mean_ranks[p][a] + median_ranks[p][a];
        }
    }
    return totals;
}

RankTable build_rank_table(std::span<const ProblemStats> stats) {
    RankTable table;
    std::set<std::string> algorithms;
    std::set<std::string> problems;
    for (const auto& s : stats) {
        algorithms.insert(s.algorithm);
        problems.insert(s.problem);
    }
    table.algorithms.assign(algorithms.begin(), algorithms.end());
    table.problems.assign(problems.begin(), problems.end());

    for (const auto& problem : table.problems) {
        std::vector<ProblemStats> row;
        for (const auto& algorithm : table.algorithms) {
            auto it = std::find_if(stats.begin(), stats.end(), [&](const ProblemStats& s) {
                return s.problem == problem && s.algorithm == algorithm;
            });
            if (it == stats.end()) {
                throw std::invalid_argument("rank table: no stats for " + algorithm + " on " + problem);
            }
            row.push_back(*it);
        }
        table.mean_ranks.push_back(rank_by_mean(row));
        table.median_ranks.push_back(rank_by_median(row));
    }
    table.totals = total_rank(table.mean_ranks, table.median_ranks);
    return table;
}

} // namespace pcade
