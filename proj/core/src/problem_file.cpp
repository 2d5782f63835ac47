#include "pcade/problem_file.hpp"

#include "pcade/expression.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pcade {
namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<double> parse_numbers(const std::string& value, std::size_t line) {
    std::vector<double> out;
    std::istringstream in(value);
    std::string token;
    while (in >> token) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ProblemFileError("line " + std::to_string(line) + ": not a number '" + token + "'");
        }
        out.push_back(v);
    }
    return out;
}

} // namespace

ProblemDefinition parse_problem_definition(std::string_view text) {
    ProblemDefinition def;
    std::vector<double> bounds;
    bool have_dim = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ProblemFileError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));

        if (key == "name") {
            def.name = value;
        } else if (key == "dim") {
            const auto nums = parse_numbers(value, line_no);
            if (nums.size() != 1 || nums[0] < 1 || nums[0] != static_cast<double>(static_cast<std::size_t>(nums[0]))) {
                throw ProblemFileError("line " + std::to_string(line_no) + ": dim must be a positive integer");
            }
            def.dimension = static_cast<std::size_t>(nums[0]);
            have_dim = true;
        } else if (key == "bounds") {
            bounds = parse_numbers(value, line_no);
        } else if (key == "delta") {
            const auto nums = parse_numbers(value, line_no);
            if (nums.size() != 1 || !(nums[0] >= 0.0)) {
                throw ProblemFileError("line " + std::to_string(line_no) + ": delta must be one non-negative number");
            }
            def.equality_tolerance = nums[0];
        } else if (key == "f") {
            def.objective = value;
        } else if (key == "g") {
            def.inequalities.push_back(value);
        } else if (key == "h") {
            def.equalities.push_back(value);
        } else if (key == "type") {
            def.info.objective_type = value;
        } else if (key == "tags") {
            std::istringstream tags(value);
            std::string tag;
            while (std::getline(tags, tag, ',')) {
                if (auto t = trim(tag); !t.empty()) {
                    def.info.tags.push_back(std::move(t));
                }
            }
        } else {
            throw ProblemFileError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }

    if (def.name.empty()) {
        throw ProblemFileError("missing 'name'");
    }
    if (!have_dim) {
        throw ProblemFileError("missing 'dim'");
    }
    if (def.objective.empty()) {
        throw ProblemFileError("missing objective 'f'");
    }
    if (bounds.size() == 2) {
        def.lower.assign(def.dimension, bounds[0]);
        def.upper.assign(def.dimension, bounds[1]);
    } else if (bounds.size() == 2 * def.dimension) {
        for (std::size_t i = 0; i < def.dimension; ++i) {
            def.lower.push_back(bounds[2 * i]);
            def.upper.push_back(bounds[2 * i + 1]);
        }
    } else {
        throw ProblemFileError("bounds must hold 2 or 2*dim numbers");
    }
    return def;
}

ProblemDefinition load_problem_definition(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ProblemFileError("cannot open problem file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_definition(buffer.str());
}

Problem build_problem(const ProblemDefinition& def) {
    auto wrap = [&](const std::string& source) -> ScalarFunction {
        auto expr = Expression::parse(source, def.dimension);
        return [expr](std::span<const double> x) { return expr.evaluate(x); };
    };
    std::vector<ScalarFunction> g;
    for (const auto& s : def.inequalities) {
        g.push_back(wrap(s));
    }
    std::vector<ScalarFunction> h;
    for (const auto& s : def.equalities) {
        h.push_back(wrap(s));
    }
    Problem p(def.name, def.lower, def.upper, wrap(def.objective), std::move(g), std::move(h),
              def.equality_tolerance);
    return p.with_info(def.info);
}

} // namespace pcade
