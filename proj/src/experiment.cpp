#include "smoothap/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "smoothap/errors.hpp"
#include "smoothap/random.hpp"
#include "smoothap/saddle.hpp"

namespace smoothap {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_real(const std::string& text) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw DomainError("not a number: '" + text + "'");
    }
    if (used != text.size()) throw DomainError("not a number: '" + text + "'");
    return v;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

}  // namespace

std::uint64_t parse_count(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.empty()) throw DomainError("empty integer");
    if (const auto caret = text.find('^'); caret != std::string::npos) {
        const auto base = parse_count(text.substr(0, caret));
        const auto exp = parse_count(text.substr(caret + 1));
        const double v = std::pow(static_cast<double>(base), static_cast<double>(exp));
        if (v > 1.8e19) throw DomainError("integer too large: '" + text + "'");
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < exp; ++i) r *= base;
        return r;
    }
    if (text.find_first_not_of("0123456789") == std::string::npos) {
        try {
            return std::stoull(text);
        } catch (const std::exception&) {
            throw DomainError("integer out of range: '" + text + "'");
        }
    }
    const double v = parse_real(text);
    if (!(v >= 0) || v > 1.8e19 || std::floor(v) != v) throw DomainError("not a non-negative integer: '" + text + "'");
    return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> parse_count_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split_list(text)) out.push_back(parse_count(item));
    return out;
}

void ExperimentConfig::validate() const {
    if (x_grid.empty() || y_grid.empty() || Q_grid.empty()) throw DomainError("experiment grids must be nonempty");
    for (auto x : x_grid)
        if (x < 3) throw DomainError("experiment: x must be >= 3");
    for (auto y : y_grid)
        if (y < 2) throw DomainError("experiment: y must be >= 2");
    for (auto Q : Q_grid)
        if (Q < 1) throw DomainError("experiment: Q must be >= 1");
    if (!(eta > 0 && eta < 1)) throw DomainError("experiment: eta must lie in (0, 1)");
    if (c_candidates.empty()) throw DomainError("experiment: need at least one c candidate");
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw DomainError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "x") cfg.x_grid = parse_count_list(value);
        else if (key == "y") cfg.y_grid = parse_count_list(value);
        else if (key == "Q") cfg.Q_grid = parse_count_list(value);
        else if (key == "eta") cfg.eta = parse_real(value);
        else if (key == "K") cfg.K = parse_real(value);
        else if (key == "c") {
            cfg.c_candidates.clear();
            for (const auto& item : split_list(value)) cfg.c_candidates.push_back(parse_real(item));
        } else if (key == "seed") cfg.seed = parse_count(value);
        else if (key == "sieve_trials") cfg.sieve_trials = parse_count(value);
        else if (key == "output") cfg.output = value;
        else if (key == "threads") cfg.threads = static_cast<unsigned>(parse_count(value));
        else if (key == "format") {
            if (value == "csv") cfg.format = ReportFormat::csv;
            else if (value == "json") cfg.format = ReportFormat::json;
            else throw DomainError("config line " + std::to_string(lineno) + ": format must be csv or json");
        } else {
            throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config: " + path.string());
    return parse_config(in);
}

SieveSummary run_sieve_trials(std::uint64_t trials, std::uint64_t max_Q, std::uint64_t max_N, std::uint64_t seed,
                              const CharacterGroups& groups) {
    SieveSummary s;
    s.trials = trials;
    Rng rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t Q = rng.integer(1, max_Q);
        const auto w = random_window(rng, max_N, 1'000'000);
        const auto r = large_sieve_check(Q, w, groups);
        if (!r.ok) ++s.violations;
        s.max_ratio = std::max(s.max_ratio, r.ratio());
    }
    return s;
}

ExperimentReport run_experiment(const ExperimentConfig& config, const FactorTable& table,
                                const CharacterGroups& groups) {
    config.validate();
    ExperimentReport report;
    report.config = config;
    report.table_limit = table.limit();
    const std::uint64_t max_Q = *std::max_element(config.Q_grid.begin(), config.Q_grid.end());
    const std::uint64_t max_y = *std::max_element(config.y_grid.begin(), config.y_grid.end());
    const PrimeList primes(max_y);

    std::vector<TheoremInstance> bv, bdh;
    for (auto x : config.x_grid) {
        table.require(x, "experiment");
        for (auto y : config.y_grid) {
            const ProgressionProfile profile(x, y, max_Q, groups, table, config.threads);
            const double alpha = solve_alpha(x, y, kDefaultAlphaTolerance, primes).alpha;
            const double log_x = std::log(static_cast<double>(x));
            for (auto Q : config.Q_grid) {
                ExperimentRecord r;
                r.x = x;
                r.y = y;
                r.Q = Q;
                r.u = log_x / std::log(static_cast<double>(y));
                r.psi = profile.psi();
                r.alpha = alpha;
                r.bv_lhs = profile.bv_lhs(Q);
                r.bv_char_form = profile.bv_char_form(Q);
                r.bdh_lhs = profile.bdh_lhs(Q);
                r.bdh_char_form = profile.bdh_char_form(Q);
                const double psi_d = static_cast<double>(r.psi);
                r.bv_range = static_cast<double>(Q) <= std::sqrt(psi_d);
                r.bdh_range = static_cast<double>(Q) <= psi_d;
                r.y_range = static_cast<double>(y) >= std::pow(log_x, config.K);
                r.buckets = conductor_buckets(x, y, Q, config.eta, groups);
                bv.push_back(make_instance(Shape::bv, profile, Q));
                bdh.push_back(make_instance(Shape::bdh, profile, Q));
                report.records.push_back(std::move(r));
            }
        }
    }

    report.bv_fitted_c = fit_constant(bv, Shape::bv);
    report.bdh_fitted_c = fit_constant(bdh, Shape::bdh);
    for (double A : {0.5, 1.0, 2.0, 4.0})
        report.alternatives.push_back({A, fit_constant(bv, Shape::bv, A), fit_constant(bdh, Shape::bdh, A)});

    for (std::size_t i = 0; i < report.records.size(); ++i) {
        auto& r = report.records[i];
        r.bv_rhs = bv[i].rhs_shape(report.bv_fitted_c);
        r.bdh_rhs = bdh[i].rhs_shape(report.bdh_fitted_c);
        if (r.bv_rhs > 0 && std::isfinite(r.bv_rhs)) r.bv_ratio = r.bv_lhs / r.bv_rhs;
        if (r.bdh_rhs > 0 && std::isfinite(r.bdh_rhs)) r.bdh_ratio = r.bdh_lhs / r.bdh_rhs;
        for (double c : config.c_candidates) {
            r.bv_rhs_candidates.push_back(bv[i].rhs_shape(c));
            r.bdh_rhs_candidates.push_back(bdh[i].rhs_shape(c));
        }
    }

    if (config.sieve_trials > 0)
        report.sieve = run_sieve_trials(config.sieve_trials, std::min<std::uint64_t>(max_Q, groups.max_modulus()),
                                        2000, config.seed, groups);
    return report;
}

void write_report_csv(std::ostream& out, const ExperimentReport& report, Shape which) {
    const bool is_bv = which == Shape::bv;
    out << (is_bv ? "x,y,u,Q,psi,alpha,bv_lhs,bv_char_form,rhs_c,ratio\n"
                  : "x,y,u,Q,psi,alpha,bdh_lhs,bdh_char_form,rhs_c,ratio\n");
    for (const auto& r : report.records) {
        const auto& ratio = is_bv ? r.bv_ratio : r.bdh_ratio;
        out << r.x << ',' << r.y << ',' << fmt(r.u) << ',' << r.Q << ',' << r.psi << ',' << fmt(r.alpha) << ','
            << fmt(is_bv ? r.bv_lhs : r.bdh_lhs) << ',' << fmt(is_bv ? r.bv_char_form : r.bdh_char_form) << ','
            << fmt(is_bv ? r.bv_rhs : r.bdh_rhs) << ',' << (ratio ? fmt(*ratio) : std::string("degenerate"))
            << '\n';
    }
}

void write_report_json(std::ostream& out, const ExperimentReport& report) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema"] = kReportSchemaVersion;
    ordered_json env;
    env["version"] = kVersion;
    env["table_limit"] = report.table_limit;
    if (report.runtime_seconds) env["runtime_seconds"] = *report.runtime_seconds;
    j["environment"] = env;

    const auto& cfg = report.config;
    ordered_json c;
    c["x"] = cfg.x_grid;
    c["y"] = cfg.y_grid;
    c["Q"] = cfg.Q_grid;
    c["eta"] = cfg.eta;
    c["c_candidates"] = cfg.c_candidates;
    c["K"] = cfg.K;
    c["seed"] = cfg.seed;
    c["sieve_trials"] = cfg.sieve_trials;
    j["config"] = c;

    ordered_json fits;
    fits["bv_c"] = report.bv_fitted_c;
    fits["bdh_c"] = report.bdh_fitted_c;
    ordered_json alts = ordered_json::array();
    for (const auto& a : report.alternatives) {
        ordered_json alt;
        alt["A"] = a.A;
        alt["bv_c"] = a.bv_c;
        alt["bdh_c"] = a.bdh_c;
        alts.push_back(alt);
    }
    fits["log_power_variants"] = alts;
    fits["log_power_variants_asserted"] = false;
    j["fits"] = fits;

    ordered_json recs = ordered_json::array();
    for (const auto& r : report.records) {
        ordered_json o;
        o["x"] = r.x;
        o["y"] = r.y;
        o["u"] = r.u;
        o["Q"] = r.Q;
        o["psi"] = r.psi;
        o["alpha"] = r.alpha;
        o["bv_lhs"] = r.bv_lhs;
        o["bv_char_form"] = r.bv_char_form;
        o["bv_rhs"] = r.bv_rhs;
        o["bv_ratio"] = r.bv_ratio ? ordered_json(*r.bv_ratio) : ordered_json("degenerate");
        o["bdh_lhs"] = r.bdh_lhs;
        o["bdh_char_form"] = r.bdh_char_form;
        o["bdh_rhs"] = r.bdh_rhs;
        o["bdh_ratio"] = r.bdh_ratio ? ordered_json(*r.bdh_ratio) : ordered_json("degenerate");
        o["bv_rhs_at_c"] = r.bv_rhs_candidates;
        o["bdh_rhs_at_c"] = r.bdh_rhs_candidates;
        o["in_bv_range"] = r.bv_range;
        o["in_bdh_range"] = r.bdh_range;
        o["y_at_least_log_K_x"] = r.y_range;
        ordered_json b;
        b["small_cutoff"] = r.buckets.small_cutoff;
        b["large_cutoff"] = r.buckets.large_cutoff;
        b["counts"] = {r.buckets.count[0], r.buckets.count[1], r.buckets.count[2]};
        b["mass"] = {r.buckets.mass[0], r.buckets.mass[1], r.buckets.mass[2]};
        b["small_degenerate"] = r.buckets.small_degenerate;
        b["large_degenerate"] = r.buckets.large_degenerate;
        o["conductor_buckets"] = b;
        recs.push_back(o);
    }
    j["records"] = recs;

    if (report.sieve.trials > 0) {
        ordered_json s;
        s["trials"] = report.sieve.trials;
        s["violations"] = report.sieve.violations;
        s["max_ratio"] = report.sieve.max_ratio;
        j["large_sieve"] = s;
    }
    out << j.dump(2) << '\n';
}

}  // namespace smoothap
