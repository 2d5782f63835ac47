#include "pcade/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pcade {

namespace {

double key_f(const RunRecord& r) {
    return std::isnan(r.f) ? std::numeric_limits<double>::infinity() : r.f;
}

double mean_violation(const RunRecord& r) {
    return r.constraint_count ? r.v / static_cast<double>(r.constraint_count) : 0.0;
}

} // namespace

bool solution_order(const RunRecord& a, const RunRecord& b) {
    if (a.feasible != b.feasible) {
        return a.feasible;
    }
    return a.feasible ? key_f(a) < key_f(b) : a.v < b.v;
}

ProblemStats summarize(std::span<const RunRecord> runs) {
    std::vector<const RunRecord*> ok;
    ok.reserve(runs.size());
    for (const auto& r : runs) {
        if (r.error.empty()) {
            ok.push_back(&r);
        }
    }
    if (ok.empty()) {
        throw std::invalid_argument("summarize: no completed runs");
    }
    std::stable_sort(ok.begin(), ok.end(), [](const RunRecord* a, const RunRecord* b) { return solution_order(*a, *b); });

    const std::size_t n = ok.size();
    const RunRecord& med = *ok[(n - 1) / 2];

    ProblemStats s;
    s.problem = med.problem;
    s.dimension = med.dimension;
    s.algorithm = med.algorithm;
    s.runs = n;
    s.best = ok.front()->f;
    s.worst = ok.back()->f;
    s.median = med.f;
    s.median_f = med.f;
    s.median_v = med.v;
    s.median_feasible = med.feasible;

    double sum = 0.0;
    double vio = 0.0;
    std::size_t feasible = 0;
    for (const auto* r : ok) {
        sum += r->f;
        vio += mean_violation(*r);
        feasible += r->feasible ? 1 : 0;
    }
    s.mean = sum / static_cast<double>(n);
    double sq = 0.0;
    for (const auto* r : ok) {
        sq += (r->f - s.mean) * (r->f - s.mean);
    }
    s.std = n > 1 ? std::sqrt(sq / static_cast<double>(n - 1)) : 0.0;
    s.sr = 100.0 * static_cast<double>(feasible) / static_cast<double>(n);
    s.vio = vio / static_cast<double>(n);

    for (double c : med.constraint_violations) {
        if (c > 1.0) {
            ++s.c1;
        } else if (c >= 0.01) {
            ++s.c2;
        } else if (c >= 1e-4) {
            ++s.c3;
        }
    }
    s.vbar = mean_violation(med);
    return s;
}

} // namespace pcade
