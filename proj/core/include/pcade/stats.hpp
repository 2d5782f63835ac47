#pragma once

#include "pcade/run_record.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pcade {

/// Terminal statistics of one algorithm on one problem over all runs.
struct ProblemStats {
    std::string problem;
    std::size_t dimension = 0;
    std::string algorithm;
    std::size_t runs = 0;

    double best = 0.0;
    double median = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double std = 0.0; ///< sample standard deviation; 0 for a single run

    /// Violated constraints at the median solution: > 1, in [0.01, 1], in [1e-4, 0.01).
    std::size_t c1 = 0;
    std::size_t c2 = 0;
    std::size_t c3 = 0;
    double vbar = 0.0; ///< mean violation over constraints at the median solution
    double sr = 0.0;   ///< percentage of feasible terminal solutions
    double vio = 0.0;  ///< mean over runs of the per-constraint mean violation

    double median_f = 0.0;
    double median_v = 0.0;
    bool median_feasible = false;
};

/// Median-solution order: feasible first, feasible by f, infeasible by v.
bool solution_order(const RunRecord& a, const RunRecord& b);

/// Runs that carry an error are skipped; throws if no usable run remains.
ProblemStats summarize(std::span<const RunRecord> runs);

} // namespace pcade
