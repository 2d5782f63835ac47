#pragma once

#include "pcade/heco.hpp"
#include "pcade/pmode.hpp"
#include "pcade/ranking.hpp"
#include "pcade/registry.hpp"
#include "pcade/run_record.hpp"
#include "pcade/stats.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcade {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AlgorithmKind { pmode, heco };

struct AlgorithmSpec {
    AlgorithmKind kind = AlgorithmKind::heco;
    std::string label; ///< empty: PMODE/CMODE/HECO-PDE/HECO-DE from the settings
    PmodeConfig pmode{};
    HecoConfig heco{};

    std::string name() const;
};

struct ProblemSpec {
    std::string name;
    std::size_t dimension = 0;
};

struct ExperimentConfig {
    std::vector<ProblemSpec> problems;
    std::vector<AlgorithmSpec> algorithms;
    std::size_t runs = 25;
    std::size_t budget_per_dimension = 20000; ///< FES_max = budget_per_dimension * n
    std::uint64_t base_seed = 0;
    std::size_t jobs = 1;
    std::filesystem::path output_dir = "results";
    std::size_t trajectory_stride = 0;

    /// Throws ConfigError for unknown problems, unsupported dimensions,
    /// duplicate algorithm names or budgets the algorithms cannot start with.
    void validate(const ProblemRegistry& registry) const;
};

/// JSON layout:
///   {"problems": [{"name": "sphere-linear", "dim": 10}],
///    "algorithms": [{"type": "heco", "pca_probability": 0.1}, {"type": "pmode"}],
///    "runs": 25, "budget_per_dim": 20000, "seed": 1, "jobs": 4,
///    "out": "results", "trajectory_stride": 0}
/// Unknown keys are rejected.
ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// base ^ mix(problem, dimension, algorithm, run); independent of execution order.
std::uint64_t run_seed(std::uint64_t base_seed, const std::string& problem, std::size_t dimension,
                       const std::string& algorithm, std::size_t run);

/// One run with FES_max = max_evaluations. Checks the evaluation counter after
/// every generation and throws std::logic_error if it overshoots.
RunRecord run_algorithm(const Problem& problem, const AlgorithmSpec& spec, std::size_t max_evaluations,
                        std::size_t trajectory_stride, std::uint64_t seed);

struct ExperimentResult {
    /// Ordered by problem, then algorithm, then run.
    std::vector<RunRecord> records;
    /// One per (problem, algorithm) with at least one completed run.
    std::vector<ProblemStats> stats;
    /// Keyed by dimension.
    std::map<std::size_t, RankTable> ranks;
    std::size_t failed_runs = 0;
};

/// Runs every cell with `config.jobs` worker threads. A failing run keeps its
/// error message in its record and the experiment carries on.
ExperimentResult run_experiment(const ExperimentConfig& config, const ProblemRegistry& registry);

/// Writes records/, stats/ and ranks/ under `out`:
///   records/<problem>_<n>D/<algorithm>/run_<r>.json
///   stats/<problem>_<n>D_<algorithm>.{json,csv}, stats/summary_<n>D.csv
///   ranks/ranks_<n>D.{json,csv}
void write_experiment(const ExperimentResult& result, const std::filesystem::path& out);

/// Filesystem-safe form of a problem or algorithm name.
std::string file_stem(const std::string& name);

} // namespace pcade
