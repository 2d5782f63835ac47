#pragma once

#include "pcade/ranking.hpp"
#include "pcade/run_record.hpp"
#include "pcade/stats.hpp"

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcade {

class ReportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string record_to_json(const RunRecord& record);
RunRecord record_from_json(const std::string& text);

std::string stats_to_json(const ProblemStats& stats);
ProblemStats stats_from_json(const std::string& text);

/// Columns: problem,best,median,c1,c2,c3,vbar,mean,worst,std,SR,vio
std::string stats_to_csv(std::span<const ProblemStats> stats);

std::string rank_table_to_json(const RankTable& table);
/// One row per algorithm: totals, then the mean and median rank on each problem.
std::string rank_table_to_csv(const RankTable& table);

/// Best/median/c/vbar/mean/worst/std/SR/vio rows, `per_block` problems per block.
std::string render_supplement_table(std::span<const ProblemStats> stats, std::size_t per_block = 7);

/// (evaluations, best_f, best_v) rows, keeping the first checkpoint at or past
/// each multiple of `stride` plus the last one; stride 0 keeps every row.
/// Throws ReportError when the record has no checkpoints.
std::string emit_trajectory(const RunRecord& record, std::size_t stride = 0);

/// Shortest round-trip decimal text of x; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double x);

std::string read_text_file(const std::filesystem::path& path);
/// Writes atomically (temp file + rename); creates parent directories.
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace pcade
