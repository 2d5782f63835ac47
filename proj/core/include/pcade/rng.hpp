#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace pcade {

/// Seeded random source shared by every stochastic routine.
///
/// All variates are derived from raw 64-bit mt19937_64 output with
/// hand-written transforms, so a seed reproduces the same stream on any
/// standard library (std::*_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x5eedULL) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    double uniform(double low, double high) { return low + (high - low) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t below(std::size_t n);

    double normal(double mean, double stddev);
    double cauchy(double location, double scale);
    bool bernoulli(double p) { return uniform() < p; }

    /// k distinct indices from [0, n) in draw order (partial Fisher-Yates).
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t value);

} // namespace pcade
