#include "pcade/experiment.hpp"

#include "pcade/report_io.hpp"
#include "pcade/rng.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <set>
#include <thread>

namespace pcade {

using nlohmann::json;

std::string AlgorithmSpec::name() const {
    if (!label.empty()) {
        return label;
    }
    if (kind == AlgorithmKind::pmode) {
        return pmode.pca_probability > 0.0 ? "PMODE" : "CMODE";
    }
    return heco.pca_probability > 0.0 ? "HECO-PDE" : "HECO-DE";
}

namespace {

de::BoundRepair parse_repair(const json& j) {
    const auto s = j.get<std::string>();
    if (s == "resample") {
        return de::BoundRepair::resample;
    }
    if (s == "clamp") {
        return de::BoundRepair::clamp;
    }
    if (s == "reflect") {
        return de::BoundRepair::reflect;
    }
    throw ConfigError("unknown bound repair '" + s + "' (resample, clamp, reflect)");
}

AlgorithmSpec parse_algorithm(const json& j) {
    if (!j.is_object() || !j.contains("type")) {
        throw ConfigError("each algorithm needs a \"type\" (pmode or heco)");
    }
    AlgorithmSpec spec;
    const auto type = j.at("type").get<std::string>();
    if (type == "pmode") {
        spec.kind = AlgorithmKind::pmode;
    } else if (type == "heco") {
        spec.kind = AlgorithmKind::heco;
    } else {
        throw ConfigError("unknown algorithm type '" + type + "'");
    }
    auto& p = spec.pmode;
    auto& h = spec.heco;
    for (const auto& [key, value] : j.items()) {
        if (key == "type") {
            continue;
        }
        if (key == "label") {
            spec.label = value.get<std::string>();
            continue;
        }
        if (key == "pca_probability") {
            p.pca_probability = h.pca_probability = value.get<double>();
            continue;
        }
        if (key == "retained_dims") {
            p.retained_dims = h.retained_dims = value.get<std::size_t>();
            continue;
        }
        if (key == "mutation_repair") {
            p.mutation_repair = h.mutation_repair = parse_repair(value);
            continue;
        }
        if (key == "projection_repair") {
            p.projection_repair = h.projection_repair = parse_repair(value);
            continue;
        }
        if (spec.kind == AlgorithmKind::pmode) {
            if (key == "population_size") p.population_size = value.get<std::size_t>();
            else if (key == "subpopulation_size") p.subpopulation_size = value.get<std::size_t>();
            else if (key == "f_min") p.f_min = value.get<double>();
            else if (key == "f_max") p.f_max = value.get<double>();
            else if (key == "cr_min") p.cr_min = value.get<double>();
            else if (key == "cr_max") p.cr_max = value.get<double>();
            else if (key == "replacement_interval") p.replacement_interval = value.get<std::size_t>();
            else throw ConfigError("unknown pmode setting '" + key + "'");
        } else {
            if (key == "subproblems") h.subproblems = value.get<std::size_t>();
            else if (key == "initial_population") h.initial_population = value.get<std::size_t>();
            else if (key == "final_population") h.final_population = value.get<std::size_t>();
            else if (key == "pbest_fraction") h.pbest_fraction = value.get<double>();
            else if (key == "archive_factor") h.archive_factor = value.get<std::size_t>();
            else if (key == "memory_size") h.strategy.memory_size = value.get<std::size_t>();
            else if (key == "prior") h.strategy.prior = value.get<double>();
            else if (key == "reset_threshold") h.strategy.reset_threshold = value.get<double>();
            else throw ConfigError("unknown heco setting '" + key + "'");
        }
    }
    return spec;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    ExperimentConfig c;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "problems") {
                for (const auto& p : value) {
                    c.problems.push_back({p.at("name").get<std::string>(), p.at("dim").get<std::size_t>()});
                }
            } else if (key == "algorithms") {
                for (const auto& a : value) {
                    c.algorithms.push_back(parse_algorithm(a));
                }
            } else if (key == "runs") {
                c.runs = value.get<std::size_t>();
            } else if (key == "budget_per_dim") {
                c.budget_per_dimension = value.get<std::size_t>();
            } else if (key == "seed") {
                c.base_seed = value.get<std::uint64_t>();
            } else if (key == "jobs") {
                c.jobs = value.get<std::size_t>();
            } else if (key == "out") {
                c.output_dir = value.get<std::string>();
            } else if (key == "trajectory_stride") {
                c.trajectory_stride = value.get<std::size_t>();
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    }
    return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    try {
        return parse_experiment_config(read_text_file(path));
    } catch (const ReportError& e) {
        throw ConfigError(e.what());
    }
}

void ExperimentConfig::validate(const ProblemRegistry& registry) const {
    if (problems.empty()) {
        throw ConfigError("config lists no problems");
    }
    if (algorithms.empty()) {
        throw ConfigError("config lists no algorithms");
    }
    if (runs == 0) {
        throw ConfigError("runs must be at least 1");
    }
    if (jobs == 0) {
        throw ConfigError("jobs must be at least 1");
    }
    std::set<std::string> names;
    for (const auto& a : algorithms) {
        if (!names.insert(a.name()).second) {
            throw ConfigError("duplicate algorithm name '" + a.name() + "'; set a distinct \"label\"");
        }
    }
    for (const auto& p : problems) {
        try {
            const Problem problem = registry.get(p.name, p.dimension);
            const std::size_t budget = budget_per_dimension * p.dimension;
            for (const auto& a : algorithms) {
                if (a.kind == AlgorithmKind::pmode) {
                    auto c = a.pmode;
                    c.max_evaluations = budget;
                    c.validate(p.dimension);
                } else {
                    auto c = a.heco;
                    c.max_evaluations = budget;
                    c.validate(p.dimension);
                }
            }
        } catch (const std::invalid_argument& e) {
            throw ConfigError(p.name + " (" + std::to_string(p.dimension) + "D): " + e.what());
        } catch (const std::runtime_error& e) {
            throw ConfigError(p.name + " (" + std::to_string(p.dimension) + "D): " + e.what());
        }
    }
}

std::uint64_t run_seed(std::uint64_t base_seed, const std::string& problem, std::size_t dimension,
                       const std::string& algorithm, std::size_t run) {
    std::uint64_t h = mix64(fnv1a(problem));
    h = mix64(h ^ static_cast<std::uint64_t>(dimension));
    h = mix64(h ^ fnv1a(algorithm));
    h = mix64(h ^ static_cast<std::uint64_t>(run));
    return base_seed ^ h;
}

RunRecord run_algorithm(const Problem& problem, const AlgorithmSpec& spec, std::size_t max_evaluations,
                        std::size_t trajectory_stride, std::uint64_t seed) {
    auto guard = [max_evaluations](const GenerationSnapshot& s) {
        if (s.evaluations > max_evaluations) {
            throw std::logic_error("evaluation counter " + std::to_string(s.evaluations) + " exceeds budget " +
                                   std::to_string(max_evaluations));
        }
    };
    RunRecord record;
    if (spec.kind == AlgorithmKind::pmode) {
        auto c = spec.pmode;
        c.max_evaluations = max_evaluations;
        c.trajectory_stride = trajectory_stride;
        record = run_pmode(problem, c, seed, guard);
    } else {
        auto c = spec.heco;
        c.max_evaluations = max_evaluations;
        c.trajectory_stride = trajectory_stride;
        record = run_heco(problem, c, seed, guard);
    }
    record.algorithm = spec.name();
    return record;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const ProblemRegistry& registry) {
    config.validate(registry);

    std::vector<Problem> problems;
    for (const auto& p : config.problems) {
        problems.push_back(registry.get(p.name, p.dimension));
    }

    const std::size_t n_alg = config.algorithms.size();
    const std::size_t total = problems.size() * n_alg * config.runs;
    ExperimentResult result;
    result.records.resize(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t task = next++; task < total; task = next++) {
            const std::size_t run = task % config.runs;
            const std::size_t a = (task / config.runs) % n_alg;
            const std::size_t p = task / (config.runs * n_alg);
            const Problem& problem = problems[p];
            const AlgorithmSpec& spec = config.algorithms[a];
            const std::size_t budget = config.budget_per_dimension * problem.dimension();
            const std::uint64_t seed =
                run_seed(config.base_seed, config.problems[p].name, problem.dimension(), spec.name(), run);
            RunRecord& out = result.records[task];
            try {
                out = run_algorithm(problem, spec, budget, config.trajectory_stride, seed);
            } catch (const std::exception& e) {
                out = RunRecord{};
                out.error = e.what();
            }
            out.problem = config.problems[p].name;
            out.dimension = problem.dimension();
            out.algorithm = spec.name();
            out.seed = seed;
            out.max_evaluations = budget;
        }
    };
    const std::size_t threads = std::min(config.jobs, std::max<std::size_t>(total, 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < threads; ++k) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    std::map<std::size_t, std::vector<ProblemStats>> by_dimension;
    for (std::size_t cell = 0; cell < problems.size() * n_alg; ++cell) {
        const auto first = result.records.begin() + static_cast<std::ptrdiff_t>(cell * config.runs);
        const std::span<const RunRecord> runs(&*first, config.runs);
        std::size_t failed = 0;
        for (const auto& r : runs) {
            failed += r.error.empty() ? 0 : 1;
        }
        result.failed_runs += failed;
        if (failed == runs.size()) {
            continue;
        }
        result.stats.push_back(summarize(runs));
        by_dimension[result.stats.back().dimension].push_back(result.stats.back());
    }
    for (const auto& [dim, stats] : by_dimension) {
        try {
            result.ranks.emplace(dim, build_rank_table(stats));
        } catch (const std::invalid_argument&) {
            // A cell with no completed run leaves the table incomplete; skip it.
        }
    }
    return result;
}

std::string file_stem(const std::string& name) {
    std::string out;
    for (char c : name) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                          c == '.' || c == '_';
        out.push_back(keep ? c : '_');
    }
    return out;
}

void write_experiment(const ExperimentResult& result, const std::filesystem::path& out) {
    std::map<std::string, std::size_t> run_index;
    for (const auto& r : result.records) {
        const std::string cell = file_stem(r.problem) + "_" + std::to_string(r.dimension) + "D";
        const std::string key = cell + "/" + file_stem(r.algorithm);
        char name[32];
        std::snprintf(name, sizeof name, "run_%03zu.json", run_index[key]++);
        write_text_file(out / "records" / cell / file_stem(r.algorithm) / name, record_to_json(r));
    }
    std::map<std::size_t, std::vector<ProblemStats>> by_dimension;
    for (const auto& s : result.stats) {
        const std::string stem =
            file_stem(s.problem) + "_" + std::to_string(s.dimension) + "D_" + file_stem(s.algorithm);
        write_text_file(out / "stats" / (stem + ".json"), stats_to_json(s));
        write_text_file(out / "stats" / (stem + ".csv"), stats_to_csv(std::span(&s, 1)));
        by_dimension[s.dimension].push_back(s);
    }
    for (const auto& [dim, stats] : by_dimension) {
        write_text_file(out / "stats" / ("summary_" + std::to_string(dim) + "D.csv"), stats_to_csv(stats));
    }
    for (const auto& [dim, table] : result.ranks) {
        const std::string stem = "ranks_" + std::to_string(dim) + "D";
        write_text_file(out / "ranks" / (stem + ".json"), rank_table_to_json(table));
        write_text_file(out / "ranks" / (stem + ".csv"), rank_table_to_csv(table));
    }
}

} // namespace pcade
