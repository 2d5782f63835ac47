#include "pcade/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pcade {

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("wilcoxon: samples differ in length");
    }
    std::vector<double> d;
    for (std::size_t k = 0; k < x.size(); ++k) {
        double diff = x[k] - y[k];
        if (std::isnan(diff)) {
            // inf - inf: both sides equally bad.
            if (std::isinf(x[k]) && x[k] == y[k]) {
                continue;
            }
            throw std::invalid_argument("wilcoxon: NaN difference");
        }
        if (diff != 0.0) {
            d.push_back(diff);
        }
    }

    WilcoxonResult result;
    result.n = d.size();
    if (d.empty()) {
        return result;
    }

    std::vector<std::size_t> order(d.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return std::abs(d[a]) < std::abs(d[b]); });

    // Doubled ranks keep tie averages integral.
    std::vector<std::size_t> rank2(d.size());
    for (std::size_t start = 0; start < order.size();) {
        std::size_t end = start;
        while (end + 1 < order.size() && std::abs(d[order[end + 1]]) == std::abs(d[order[start]])) {
            ++end;
        }
        const std::size_t doubled = start + end + 2;
        for (std::size_t k = start; k <= end; ++k) {
            rank2[order[k]] = doubled;
        }
        start = end + 1;
    }

    std::size_t observed = 0;
    std::size_t total = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        total += rank2[k];
        if (d[k] > 0.0) {
            observed += rank2[k];
        }
    }

    // counts[s]: number of sign assignments with doubled positive rank sum s.
    std::vector<double> counts(total + 1, 0.0);
    counts[0] = 1.0;
    std::size_t reach = 0;
    for (std::size_t r : rank2) {
        for (std::size_t s = reach + 1; s-- > 0;) {
            if (counts[s] != 0.0) {
                counts[s + r] += counts[s];
            }
        }
        reach += r;
    }
    const double all = std::ldexp(1.0, static_cast<int>(d.size()));
    double le = 0.0;
    double ge = 0.0;
    for (std::size_t s = 0; s <= total; ++s) {
        if (s <= observed) {
            le += counts[s];
        }
        if (s >= observed) {
            ge += counts[s];
        }
    }
    result.w_plus = static_cast<double>(observed) / 2.0;
    result.p_less = std::min(1.0, le / all);
    result.p_greater = std::min(1.0, ge / all);
    return result;
}

} // namespace pcade
