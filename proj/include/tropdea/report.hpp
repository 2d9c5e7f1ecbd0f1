#ifndef TROPDEA_REPORT_HPP
#define TROPDEA_REPORT_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropdea/distance.hpp"
#include "tropdea/duality.hpp"
#include "tropdea/oracle.hpp"

namespace tropdea {

/// Display rounding: n < 0 keeps full precision (17 significant digits).
std::string format_double(double v, int round_digits = -1);

std::string score_report_json(const std::string& dataset_name, const TechSpec& tech, Orientation o,
                              const std::vector<ScoreRecord>& scores, int round_digits = -1);
std::string score_report_csv(const std::string& dataset_name, const TechSpec& tech, Orientation o,
                             const std::vector<ScoreRecord>& scores, int round_digits = -1);

/// Post-write audit: every benchmark must pass the membership predicate of
/// its technology (with a 1e-9 shrink of the shift, since benchmarks sit on
/// the frontier).
bool audit_scores(const Dataset& ds, const std::vector<ScoreRecord>& scores);

struct SweepResult {
    std::vector<double> alphas;
    /// scores[firm][alpha index]
    std::vector<std::vector<double>> scores;
    std::vector<double> limit_scores;
    std::vector<std::string> firm_ids;
};

SweepResult run_sweep(const Dataset& ds, Family family, std::span<const double> alphas,
                      const Alpha& target, Orientation o);
std::string sweep_report_csv(const SweepResult& r, int round_digits = -1);
std::string sweep_report_json(const std::string& dataset_name, Family family, Orientation o,
                              const SweepResult& r, int round_digits = -1);

std::string duality_report_json(const std::vector<DualityReport>& reports, int round_digits = -1);

std::string hull_gap_csv(const std::vector<std::pair<double, double>>& gaps);

std::string oracle_report_lines(const std::vector<OracleReport>& reports);

/// The built-in example's reference score table and its recomputation.
struct ReproduceCell {
    double computed = 0.0;
    std::optional<double> reference;
    std::string mark; // MATCH | MISMATCH | UNMAPPED | "" (computed only)
};

struct ReproduceReport {
    std::vector<std::string> columns;
    std::vector<std::string> firm_ids;
    /// cells[firm][column]
    std::vector<std::vector<ReproduceCell>> cells;
};

ReproduceReport run_reproduce();
std::string reproduce_report_text(const ReproduceReport& r);
std::string reproduce_report_json(const ReproduceReport& r);

} // namespace tropdea

#endif
