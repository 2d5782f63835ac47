#pragma once

#include "pcade/problem.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pcade {

struct TrajectoryPoint {
    std::size_t evaluations = 0;
    double best_f = 0.0;
    double best_v = 0.0;
};

/// Terminal state of one algorithm run on one problem.
struct RunRecord {
    std::string problem;
    std::size_t dimension = 0;
    std::string algorithm;
    std::uint64_t seed = 0;

    Vector best_x;
    double f = 0.0;
    double v = 0.0;
    bool feasible = false;
    Vector constraint_violations; ///< inequalities first, then equalities
    std::size_t constraint_count = 0;

    std::size_t evaluations = 0;
    std::size_t max_evaluations = 0;
    std::size_t generations = 0;

    bool trajectory_enabled = false;
    std::vector<TrajectoryPoint> trajectory;

    /// Non-empty when the run aborted; numeric fields are then meaningless.
    std::string error;
};

/// Keeps the best-so-far solution (feasibility first, then f, then v) and
/// optional trajectory checkpoints during a run.
class BestTracker {
public:
    explicit BestTracker(std::size_t checkpoint_stride = 0) : stride_(checkpoint_stride) {}

    void offer(const Individual& candidate);
    bool has_best() const { return has_best_; }
    const Individual& best() const { return best_; }

    /// Records (evaluations, best f, best v) whenever `evaluations` crosses a
    /// multiple of the stride; `force` records regardless (final checkpoint).
    void checkpoint(std::size_t evaluations, bool force = false);

    void fill(RunRecord& record, std::size_t evaluations) const;

private:
    std::size_t stride_;
    std::size_t next_checkpoint_ = 0;
    bool has_best_ = false;
    Individual best_;
    std::vector<TrajectoryPoint> trajectory_;
};

} // namespace pcade
