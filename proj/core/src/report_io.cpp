#include "pcade/report_io.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace pcade {

using nlohmann::json;

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, end);
}

namespace {

json number(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    return format_double(x);
}

double to_double(const json& j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") {
            return std::numeric_limits<double>::infinity();
        }
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
        if (s == "nan") {
            return std::numeric_limits<double>::quiet_NaN();
        }
    }
    throw ReportError("expected a number, got " + j.dump());
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (double x : v) {
        out.push_back(number(x));
    }
    return out;
}

Vector vector_from(const json& j) {
    Vector v;
    for (const auto& x : j) {
        v.push_back(to_double(x));
    }
    return v;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ReportError(std::string("malformed JSON: ") + e.what());
    }
}

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ReportError(std::string(what) + ": " + e.what());
    }
}

} // namespace

std::string record_to_json(const RunRecord& r) {
    json j;
    j["problem"] = r.problem;
    j["dimension"] = r.dimension;
    j["algorithm"] = r.algorithm;
    j["seed"] = r.seed;
    j["best_x"] = vector_json(r.best_x);
    j["f"] = number(r.f);
    j["v"] = number(r.v);
    j["feasible"] = r.feasible;
    j["constraint_violations"] = vector_json(r.constraint_violations);
    j["constraint_count"] = r.constraint_count;
    j["evaluations"] = r.evaluations;
    j["max_evaluations"] = r.max_evaluations;
    j["generations"] = r.generations;
    j["trajectory_enabled"] = r.trajectory_enabled;
    json traj = json::array();
    for (const auto& p : r.trajectory) {
        traj.push_back({p.evaluations, number(p.best_f), number(p.best_v)});
    }
    j["trajectory"] = traj;
    j["error"] = r.error;
    return j.dump(2) + "\n";
}

RunRecord record_from_json(const std::string& text) {
    const json j = parse(text);
    return guarded("run record", [&] {
        RunRecord r;
        r.problem = j.at("problem").get<std::string>();
        r.dimension = j.at("dimension").get<std::size_t>();
        r.algorithm = j.at("algorithm").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.best_x = vector_from(j.at("best_x"));
        r.f = to_double(j.at("f"));
        r.v = to_double(j.at("v"));
        r.feasible = j.at("feasible").get<bool>();
        r.constraint_violations = vector_from(j.at("constraint_violations"));
        r.constraint_count = j.at("constraint_count").get<std::size_t>();
        r.evaluations = j.at("evaluations").get<std::size_t>();
        r.max_evaluations = j.at("max_evaluations").get<std::size_t>();
        r.generations = j.at("generations").get<std::size_t>();
        r.trajectory_enabled = j.at("trajectory_enabled").get<bool>();
        for (const auto& p : j.at("trajectory")) {
            r.trajectory.push_back({p.at(0).get<std::size_t>(), to_double(p.at(1)), to_double(p.at(2))});
        }
        r.error = j.value("error", "");
        return r;
    });
}

std::string stats_to_json(const ProblemStats& s) {
    json j;
    j["problem"] = s.problem;
    j["dimension"] = s.dimension;
    j["algorithm"] = s.algorithm;
    j["runs"] = s.runs;
    j["best"] = number(s.best);
    j["median"] = number(s.median);
    j["worst"] = number(s.worst);
    j["mean"] = number(s.mean);
    j["std"] = number(s.std);
    j["c"] = {s.c1, s.c2, s.c3};
    j["vbar"] = number(s.vbar);
    j["SR"] = number(s.sr);
    j["vio"] = number(s.vio);
    j["median_f"] = number(s.median_f);
    j["median_v"] = number(s.median_v);
    j["median_feasible"] = s.median_feasible;
    return j.dump(2) + "\n";
}

ProblemStats stats_from_json(const std::string& text) {
    const json j = parse(text);
    return guarded("problem stats", [&] {
        ProblemStats s;
        s.problem = j.at("problem").get<std::string>();
        s.dimension = j.at("dimension").get<std::size_t>();
        s.algorithm = j.at("algorithm").get<std::string>();
        s.runs = j.at("runs").get<std::size_t>();
        s.best = to_double(j.at("best"));
        s.median = to_double(j.at("median"));
        s.worst = to_double(j.at("worst"));
        s.mean = to_double(j.at("mean"));
        s.std = to_double(j.at("std"));
        s.c1 = j.at("c").at(0).get<std::size_t>();
        s.c2 = j.at("c").at(1).get<std::size_t>();
        s.c3 = j.at("c").at(2).get<std::size_t>();
        s.vbar = to_double(j.at("vbar"));
        s.sr = to_double(j.at("SR"));
        s.vio = to_double(j.at("vio"));
        s.median_f = to_double(j.at("median_f"));
        s.median_v = to_double(j.at("median_v"));
        s.median_feasible = j.at("median_feasible").get<bool>();
        return s;
    });
}

std::string stats_to_csv(std::span<const ProblemStats> stats) {
    std::ostringstream out;
    out << "problem,best,median,c1,c2,c3,vbar,mean,worst,std,SR,vio\n";
    for (const auto& s : stats) {
        out << s.problem << ',' << format_double(s.best) << ',' << format_double(s.median) << ',' << s.c1 << ','
            << s.c2 << ',' << s.c3 << ',' << format_double(s.vbar) << ',' << format_double(s.mean) << ','
            << format_double(s.worst) << ',' << format_double(s.std) << ',' << format_double(s.sr) << ','
            << format_double(s.vio) << '\n';
    }
    return out.str();
}

std::string rank_table_to_json(const RankTable& t) {
    json j;
    j["algorithms"] = t.algorithms;
    j["problems"] = t.problems;
    j["mean_ranks"] = t.mean_ranks;
    j["median_ranks"] = t.median_ranks;
    json totals = json::object();
    for (std::size_t a = 0; a < t.algorithms.size(); ++a) {
        totals[t.algorithms[a]] = {{"mean", t.mean_sum(a)}, {"median", t.median_sum(a)}, {"total", t.totals.at(a)}};
    }
    j["totals"] = totals;
    return j.dump(2) + "\n";
}

std::string rank_table_to_csv(const RankTable& t) {
    std::ostringstream out;
    out << "algorithm,total,mean_sum,median_sum";
    for (const auto& p : t.problems) {
        out << ",mean:" << p << ",median:" << p;
    }
    out << '\n';
    for (std::size_t a = 0; a < t.algorithms.size(); ++a) {
        out << t.algorithms[a] << ',' << t.totals.at(a) << ',' << t.mean_sum(a) << ',' << t.median_sum(a);
        for (std::size_t p = 0; p < t.problems.size(); ++p) {
            out << ',' << t.mean_ranks[p][a] << ',' << t.median_ranks[p][a];
        }
        out << '\n';
    }
    return out.str();
}

std::string render_supplement_table(std::span<const ProblemStats> stats, std::size_t per_block) {
    if (per_block == 0) {
        throw ReportError("table: block width must be positive");
    }
    auto sci = [](double x) {
        if (!std::isfinite(x)) {
            return format_double(x);
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.5e", x);
        return std::string(buf);
    };
    constexpr int width = 14;
    std::ostringstream out;
    auto cell = [&](const std::string& text) {
        out << ' ';
        for (std::size_t k = text.size(); k < width; ++k) {
            out << ' ';
        }
        out << text;
    };
    for (std::size_t start = 0; start < stats.size(); start += per_block) {
        const auto block = stats.subspan(start, std::min(per_block, stats.size() - start));
        auto row = [&](const char* label, auto&& value) {
            out << label;
            for (std::size_t k = std::char_traits<char>::length(label); k < 8; ++k) {
                out << ' ';
            }
            for (const auto& s : block) {
                cell(value(s));
            }
            out << '\n';
        };
        if (start > 0) {
            out << '\n';
        }
        row("Problem", [](const ProblemStats& s) { return s.problem; });
        row("Best", [&](const ProblemStats& s) { return sci(s.best); });
        row("Median", [&](const ProblemStats& s) { return sci(s.median); });
        row("c", [](const ProblemStats& s) {
            return std::to_string(s.c1) + "," + std::to_string(s.c2) + "," + std::to_string(s.c3);
        });
        row("vbar", [&](const ProblemStats& s) { return sci(s.vbar); });
        row("Mean", [&](const ProblemStats& s) { return sci(s.mean); });
        row("Worst", [&](const ProblemStats& s) { return sci(s.worst); });
        row("std", [&](const ProblemStats& s) { return sci(s.std); });
        row("SR", [](const ProblemStats& s) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "%g", s.sr);
            return std::string(buf);
        });
        row("vio", [&](const ProblemStats& s) { return sci(s.vio); });
    }
    return out.str();
}

std::string emit_trajectory(const RunRecord& record, std::size_t stride) {
    if (!record.trajectory_enabled || record.trajectory.empty()) {
        throw ReportError("trajectory: run " + record.problem + "/" + record.algorithm + " has no checkpoints");
    }
    std::ostringstream out;
    out << "evaluations,best_f,best_v\n";
    std::size_t next = 0;
    const auto& points = record.trajectory;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const bool last = k + 1 == points.size();
        if (stride == 0 || points[k].evaluations >= next || last) {
            out << points[k].evaluations << ',' << format_double(points[k].best_f) << ','
                << format_double(points[k].best_v) << '\n';
            if (stride) {
                next = (points[k].evaluations / stride + 1) * stride;
            }
        }
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ReportError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ReportError("cannot write " + tmp.string());
        }
        out << text;
        if (!out) {
            throw ReportError("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace pcade
