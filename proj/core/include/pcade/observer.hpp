#pragma once

#include "pcade/problem.hpp"

#include <cstddef>
#include <functional>
#include <span>

namespace pcade {

/// State exposed at the end of every generation, for logging and invariant checks.
struct GenerationSnapshot {
    std::size_t generation = 0;
    std::size_t evaluations = 0;
    std::size_t target_population = 0; ///< scheduled size (PMODE: constant mu)
    std::size_t archive_size = 0;
    std::size_t archive_capacity = 0;   ///< 0 when uncapped
    std::span<const Individual> population;
};

using GenerationObserver = std::function<void(const GenerationSnapshot&)>;

} // namespace pcade
