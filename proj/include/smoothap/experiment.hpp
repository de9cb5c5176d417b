#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smoothap/characters.hpp"
#include "smoothap/factor_table.hpp"
#include "smoothap/large_sieve.hpp"
#include "smoothap/theorems.hpp"

namespace smoothap {

inline constexpr const char* kVersion = "1.0.0";
// Bumped whenever CSV columns or JSON keys change.
inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { csv, json };

struct ExperimentConfig {
    std::vector<std::uint64_t> x_grid;
    std::vector<std::uint64_t> y_grid;
    std::vector<std::uint64_t> Q_grid;
    double eta = 0.25;
    std::vector<double> c_candidates{0.05, 0.1, 0.25, 0.5, 1.0};
    double K = 2.0;  // grid points with y < log^K x are flagged, not dropped
    std::uint64_t seed = 1;
    std::uint64_t sieve_trials = 0;  // randomized large-sieve windows per run
    std::string output;              // empty: standard output
    ReportFormat format = ReportFormat::json;
    unsigned threads = 1;

    // Throws DomainError when a grid is empty or holds a zero.
    void validate() const;
};

// Flat "key = value" text; '#' starts a comment; lists are comma-separated.
// Keys: x, y, Q, eta, c, K, seed, sieve_trials, output, format, threads.
// Integers accept scientific shorthand such as 1e5.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

std::uint64_t parse_count(const std::string& text);
std::vector<std::uint64_t> parse_count_list(const std::string& text);

struct ExperimentRecord {
    std::uint64_t x = 0, y = 0, Q = 0;
    double u = 0;
    std::uint64_t psi = 0;
    double alpha = 0;
    double bv_lhs = 0, bv_char_form = 0;
    double bdh_lhs = 0, bdh_char_form = 0;
    double bv_rhs = 0, bdh_rhs = 0;  // at the fitted constant
    std::optional<double> bv_ratio, bdh_ratio;  // empty when degenerate
    std::vector<double> bv_rhs_candidates, bdh_rhs_candidates;  // per c candidate
    bool bv_range = true;   // Q <= sqrt(Psi)
    bool bdh_range = true;  // Q <= Psi
    bool y_range = true;    // y >= log^K x
    ConductorBuckets buckets;
};

struct AlternativeFit {
    double A = 0;
    double bv_c = 0;
    double bdh_c = 0;
};

struct SieveSummary {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    double max_ratio = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::uint64_t table_limit = 0;
    std::vector<ExperimentRecord> records;
    double bv_fitted_c = 0;
    double bdh_fitted_c = 0;
    std::vector<AlternativeFit> alternatives;  // log^A-improved shapes; not asserted
    SieveSummary sieve;
    std::optional<double> runtime_seconds;  // only when timings were requested
};

ExperimentReport run_experiment(const ExperimentConfig& config, const FactorTable& table,
                                const CharacterGroups& groups);

// One row per record:
//   x,y,u,Q,psi,alpha,bv_lhs,bv_char_form,rhs_c,ratio   (Shape::bv)
//   x,y,u,Q,psi,alpha,bdh_lhs,bdh_char_form,rhs_c,ratio (Shape::bdh)
void write_report_csv(std::ostream& out, const ExperimentReport& report, Shape which);
void write_report_json(std::ostream& out, const ExperimentReport& report);

// Random-window large sieve trials: Q uniform in [1, max_Q], N in [1, max_N].
SieveSummary run_sieve_trials(std::uint64_t trials, std::uint64_t max_Q, std::uint64_t max_N, std::uint64_t seed,
                              const CharacterGroups& groups);

}  // namespace smoothap
