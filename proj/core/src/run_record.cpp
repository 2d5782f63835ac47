#include "pcade/run_record.hpp"

namespace pcade {

void BestTracker::offer(const Individual& candidate) {
    if (!has_best_ || better_solution(candidate.eval, best_.eval)) {
        best_ = candidate;
        has_best_ = true;
    }
}

void BestTracker::checkpoint(std::size_t evaluations, bool force) {
    if (stride_ == 0 || !has_best_) {
        return;
    }
    if (!trajectory_.empty() && trajectory_.back().evaluations >= evaluations) {
        return;
    }
    if (force || evaluations >= next_checkpoint_) {
        trajectory_.push_back({evaluations, best_.eval.f, best_.eval.violation});
        next_checkpoint_ = (evaluations / stride_ + 1) * stride_;
    }
}

void BestTracker::fill(RunRecord& record, std::size_t evaluations) const {
    record.evaluations = evaluations;
    record.trajectory_enabled = stride_ > 0;
    record.trajectory = trajectory_;
    if (!has_best_) {
        return;
    }
    record.best_x = best_.x;
    record.f = best_.eval.f;
    record.v = best_.eval.violation;
    record.feasible = best_.eval.feasible;
    record.constraint_violations = best_.eval.inequality_violation;
    record.constraint_violations.insert(record.constraint_violations.end(),
                                        best_.eval.equality_violation.begin(),
                                        best_.eval.equality_violation.end());
    record.constraint_count = record.constraint_violations.size();
}

} // namespace pcade
