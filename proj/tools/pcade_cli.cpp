// pcade: run constrained-DE experiments and aggregate their results.
//
//   pcade run --config exp.json [--out DIR] [--jobs N] [--seed U64]
//   pcade stats --records DIR [--out DIR]
//   pcade rank --stats DIR [--out DIR]
//   pcade table --stats DIR [--algorithm NAME] [--dim N]
//   pcade trajectory --record FILE [--stride N]
//
// PCADE_OUTPUT_DIR overrides the config's output directory; --out overrides both.

#include "pcade/experiment.hpp"
#include "pcade/ranking.hpp"
#include "pcade/report_io.hpp"
#include "pcade/stats.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <tuple>

namespace fs = std::filesystem;
using namespace pcade;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPartial = 3;

std::vector<fs::path> json_files(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw ConfigError("not a directory: " + dir.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::vector<ProblemStats> load_stats(const fs::path& dir) {
    std::vector<ProblemStats> stats;
    for (const auto& file : json_files(dir)) {
        stats.push_back(stats_from_json(read_text_file(file)));
    }
    if (stats.empty()) {
        throw ConfigError("no stats files under " + dir.string());
    }
    return stats;
}

int cmd_run(const fs::path& config_path, const std::optional<fs::path>& out, std::optional<std::size_t> jobs,
            std::optional<std::uint64_t> seed) {
    ExperimentConfig config = load_experiment_config(config_path);
    if (const char* env = std::getenv("PCADE_OUTPUT_DIR"); env && *env) {
        config.output_dir = env;
    }
    if (out) {
        config.output_dir = *out;
    }
    if (jobs) {
        config.jobs = *jobs;
    }
    if (seed) {
        config.base_seed = *seed;
    }
    const ProblemRegistry registry = ProblemRegistry::with_builtins();
    config.validate(registry);
    const ExperimentResult result = run_experiment(config, registry);
    write_experiment(result, config.output_dir);
    std::cout << result.records.size() << " runs, " << result.stats.size() << " stats, " << result.ranks.size()
              << " rank tables written to " << config.output_dir.string() << '\n';
    if (result.failed_runs) {
        std::cerr << result.failed_runs << " run(s) failed; see the error field of their records\n";
        for (const auto& r : result.records) {
            if (!r.error.empty()) {
                std::cerr << "  " << r.problem << " " << r.dimension << "D " << r.algorithm << ": " << r.error << '\n';
                break;
            }
        }
        return kExitPartial;
    }
    return kExitOk;
}

int cmd_stats(const fs::path& records_dir, const fs::path& out) {
    std::map<std::tuple<std::string, std::size_t, std::string>, std::vector<RunRecord>> cells;
    for (const auto& file : json_files(records_dir)) {
        RunRecord r = record_from_json(read_text_file(file));
        cells[{r.problem, r.dimension, r.algorithm}].push_back(std::move(r));
    }
    if (cells.empty()) {
        throw ConfigError("no run records under " + records_dir.string());
    }
    std::vector<ProblemStats> all;
    for (const auto& [key, runs] : cells) {
        const ProblemStats s = summarize(runs);
        const std::string stem =
            file_stem(s.problem) + "_" + std::to_string(s.dimension) + "D_" + file_stem(s.algorithm);
        write_text_file(out / (stem + ".json"), stats_to_json(s));
        all.push_back(s);
    }
    std::cout << stats_to_csv(all);
    return kExitOk;
}

int cmd_rank(const fs::path& stats_dir, const std::optional<fs::path>& out) {
    std::map<std::size_t, std::vector<ProblemStats>> by_dimension;
    for (auto& s : load_stats(stats_dir)) {
        by_dimension[s.dimension].push_back(s);
    }
    for (const auto& [dim, stats] : by_dimension) {
        const RankTable table = build_rank_table(stats);
        const std::string stem = "ranks_" + std::to_string(dim) + "D";
        if (out) {
            write_text_file(*out / (stem + ".json"), rank_table_to_json(table));
            write_text_file(*out / (stem + ".csv"), rank_table_to_csv(table));
        }
        std::cout << "# " << dim << "D\n" << rank_table_to_csv(table);
    }
    return kExitOk;
}

int cmd_table(const fs::path& stats_dir, const std::string& algorithm, std::size_t dim) {
    std::vector<ProblemStats> picked;
    for (auto& s : load_stats(stats_dir)) {
        if ((algorithm.empty() || s.algorithm == algorithm) && (dim == 0 || s.dimension == dim)) {
            picked.push_back(s);
        }
    }
    if (picked.empty()) {
        throw ConfigError("no stats match the requested algorithm/dimension");
    }
    std::stable_sort(picked.begin(), picked.end(), [](const ProblemStats& a, const ProblemStats& b) {
        return std::tie(a.algorithm, a.dimension) < std::tie(b.algorithm, b.dimension);
    });
    for (std::size_t k = 0; k < picked.size();) {
        std::size_t end = k;
        while (end < picked.size() && picked[end].algorithm == picked[k].algorithm &&
               picked[end].dimension == picked[k].dimension) {
            ++end;
        }
        std::cout << picked[k].algorithm << ", " << picked[k].dimension << "D\n"
                  << render_supplement_table(std::span(picked).subspan(k, end - k)) << '\n';
        k = end;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained differential evolution experiments"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Execute an experiment config");
    fs::path config_path;
    std::optional<fs::path> run_out;
    std::optional<std::size_t> jobs;
    std::optional<std::uint64_t> seed;
    run->add_option("--config", config_path, "Experiment JSON")->required()->check(CLI::ExistingFile);
    run->add_option("--out", run_out, "Output directory");
    run->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Base seed");

    auto* stats = app.add_subcommand("stats", "Aggregate run records into per-problem stats");
    fs::path records_dir;
    fs::path stats_out = "stats";
    stats->add_option("--records", records_dir, "Directory of run records")->required();
    stats->add_option("--out", stats_out, "Where to write stats JSON");

    auto* rank = app.add_subcommand("rank", "Build rank tables from stats");
    fs::path rank_stats;
    std::optional<fs::path> rank_out;
    rank->add_option("--stats", rank_stats, "Directory of stats JSON")->required();
    rank->add_option("--out", rank_out, "Where to write rank tables");

    auto* table = app.add_subcommand("table", "Render supplement-style result tables");
    fs::path table_stats;
    std::string table_algorithm;
    std::size_t table_dim = 0;
    table->add_option("--stats", table_stats, "Directory of stats JSON")->required();
    table->add_option("--algorithm", table_algorithm, "Only this algorithm");
    table->add_option("--dim", table_dim, "Only this dimension");

    auto* traj = app.add_subcommand("trajectory", "Print a run's convergence checkpoints as CSV");
    fs::path record_path;
    std::size_t stride = 0;
    traj->add_option("--record", record_path, "Run record JSON")->required()->check(CLI::ExistingFile);
    traj->add_option("--stride", stride, "Keep one row per this many evaluations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*run) {
            return cmd_run(config_path, run_out, jobs, seed);
        }
        if (*stats) {
            return cmd_stats(records_dir, stats_out);
        }
        if (*rank) {
            return cmd_rank(rank_stats, rank_out);
        }
        if (*table) {
            return cmd_table(table_stats, table_algorithm, table_dim);
        }
        if (*traj) {
            std::cout << emit_trajectory(record_from_json(read_text_file(record_path)), stride);
            return kExitOk;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ReportError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
