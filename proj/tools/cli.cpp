#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "smoothap/character_sums.hpp"
#include "smoothap/characters.hpp"
#include "smoothap/dickman.hpp"
#include "smoothap/errors.hpp"
#include "smoothap/experiment.hpp"
#include "smoothap/factor_table.hpp"
#include "smoothap/large_sieve.hpp"
#include "smoothap/perron.hpp"
#include "smoothap/random.hpp"
#include "smoothap/saddle.hpp"
#include "smoothap/smooth_count.hpp"
#include "smoothap/theorems.hpp"

namespace smoothap::cli {

namespace {

using Cell = std::variant<std::nullptr_t, std::string, std::uint64_t, std::int64_t, double, bool>;
using Row = std::vector<std::pair<std::string, Cell>>;

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::nullptr_t>) {
                return "n/a";
            } else if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, double>) {
                std::ostringstream os;
                os << std::setprecision(12) << v;
                return os.str();
            } else {
                return std::to_string(v);
            }
        },
        c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::nullptr_t>)
                return nullptr;
            else
                return v;
        },
        c);
}

// csv: header plus one line per row. json: one object, or an array when
// the command can produce several rows.
void emit(std::ostream& out, const std::string& format, const std::vector<Row>& rows, bool many) {
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json o = nlohmann::ordered_json::object();
            for (const auto& [k, v] : row) o[k] = cell_json(v);
            arr.push_back(o);
        }
        out << (many || rows.size() != 1 ? arr : arr[0]).dump(2) << '\n';
        return;
    }
    if (rows.empty()) return;
    for (std::size_t i = 0; i < rows[0].size(); ++i) out << (i ? "," : "") << rows[0][i].first;
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i].second);
        out << '\n';
    }
}

struct Globals {
    std::uint64_t limit = kMaxTableLimit;
    std::string cache;
    std::string format;
    std::uint64_t seed = 1;
    double eta = 0.25;
    unsigned threads = 1;
};

class Session {
public:
    Session(const Globals& g, std::ostream& out, std::ostream& err) : g_(g), out_(out), err_(err) {}

    std::ostream& out() { return out_; }
    std::ostream& err() { return err_; }
    const Globals& globals() const { return g_; }
    std::string format(const std::string& fallback) const { return g_.format.empty() ? fallback : g_.format; }

    const FactorTable& table(std::uint64_t needed) {
        needed = std::max<std::uint64_t>(needed, 16);
        if (table_ && table_->limit() >= needed) return *table_;
        if (needed > g_.limit)
            throw CapacityError("need a factor table up to " + std::to_string(needed) + " but --limit is " +
                                std::to_string(g_.limit));
        if (needed > kMaxTableLimit)
            throw CapacityError("need a factor table up to " + std::to_string(needed) + ", above the ceiling " +
                                std::to_string(kMaxTableLimit));
        if (!g_.cache.empty() && std::filesystem::exists(g_.cache)) {
            auto loaded = load_factor_table(g_.cache);
            if (loaded.limit() >= needed) {
                table_ = std::move(loaded);
                return *table_;
            }
            err_ << "table cache " << g_.cache << " covers " << loaded.limit() << ", rebuilding\n";
        }
        err_ << "building factor table up to " << needed << "\n";
        table_ = build_factor_table(needed, g_.threads);
        if (!g_.cache.empty()) save_factor_table(*table_, g_.cache);
        return *table_;
    }

private:
    Globals g_;
    std::ostream& out_;
    std::ostream& err_;
    std::optional<FactorTable> table_;
};

// Integer arguments accept 100000, 1e5 and 10^5.
std::uint64_t count_arg(const std::string& text, const char* name) {
    try {
        return parse_count(text);
    } catch (const DomainError&) {
        throw DomainError(std::string(name) + ": expected a non-negative integer, got '" + text + "'");
    }
}

std::uint64_t checked_modulus(std::uint64_t q) {
    if (q < 1 || q > kMaxCharacterModulus)
        throw DomainError("modulus must lie in [1, " + std::to_string(kMaxCharacterModulus) + "]");
    return q;
}

Row character_columns(const DirichletCharacter& chi) {
    return {{"index", chi.index()},
            {"order", chi.order()},
            {"conductor", chi.conductor()},
            {"primitive", chi.is_primitive()},
            {"parity", static_cast<std::int64_t>(chi.parity())}};
}

void append(Row& row, const Row& more) { row.insert(row.end(), more.begin(), more.end()); }

// ---------------------------------------------------------------------------

struct PsiArgs {
    std::string x, y;
    std::optional<std::string> mod, res, interval;
};

int cmd_psi(Session& s, const PsiArgs& a) {
    const auto x = count_arg(a.x, "x");
    const auto y = count_arg(a.y, "y");
    if (a.res && !a.mod) throw DomainError("--res requires --mod");
    if (a.interval && a.mod) throw DomainError("--interval cannot be combined with --mod");
    std::uint64_t value;
    if (a.interval) {
        const auto z = count_arg(*a.interval, "interval");
        value = psi_short_interval(x, z, y, s.table(x + z));
    } else if (a.mod) {
        const auto q = count_arg(*a.mod, "mod");
        if (q == 0) throw DomainError("--mod must be >= 1");
        const auto& t = s.table(x);
        value = a.res ? psi_progression(x, y, q, count_arg(*a.res, "res"), t) : psi_coprime(x, y, q, t);
    } else {
        value = psi(x, y, s.table(x));
    }
    s.out() << value << '\n';
    return kOk;
}

struct AlphaArgs {
    std::string x, y;
    double tol = kDefaultAlphaTolerance;
    bool with_psi = false;
};

int cmd_alpha(Session& s, const AlphaArgs& a) {
    const auto x = count_arg(a.x, "x");
    const auto y = count_arg(a.y, "y");
    const PrimeList primes(std::max<std::uint64_t>(y, 2));
    const auto sp = solve_alpha(x, y, a.tol, primes);
    Cell approx = nullptr;
    try {
        approx = alpha_approx(x, y);
    } catch (const DomainError&) {
    }
    const double lx = std::log(static_cast<double>(x));
    Row row{{"x", x},
            {"y", y},
            {"u", lx / std::log(static_cast<double>(y))},
            {"alpha", sp.alpha},
            {"residual", sp.residual},
            {"alpha_approx", approx},
            {"zeta", zeta_smooth(sp.alpha, y, primes)},
            {"ht_estimate", ht_estimate(sp, primes)},
            {"rankin_bound", rankin_bound(sp, primes)}};
    if (a.with_psi) row.emplace_back("psi", psi(x, y, s.table(x)));
    emit(s.out(), s.format("csv"), {row}, false);
    return kOk;
}

struct RhoArgs {
    double u_max = 10;
    double step = 0.1;
};

int cmd_rho(Session& s, const RhoArgs& a) {
    if (!(a.step > 0)) throw DomainError("--step must be positive");
    // Integrate on a grid no coarser than the default and sample every `step`.
    const double per = std::ceil(a.step / kDefaultDickmanStep - 1e-9);
    const DickmanTable table(a.u_max, a.step / std::max(per, 1.0));
    if (s.format("csv") == "csv") {
        write_dickman_csv(s.out(), table, a.step);
        return kOk;
    }
    std::vector<Row> rows;
    const auto stride = static_cast<std::size_t>(std::llround(a.step / table.step()));
    for (std::size_t i = 0; i < table.values().size(); i += stride)
        rows.push_back({{"u", static_cast<double>(i) * table.step()}, {"rho", table.values()[i]}});
    emit(s.out(), "json", rows, true);
    return kOk;
}

struct CharsumArgs {
    std::string x, y, mod;
    std::optional<std::uint64_t> index;
};

int cmd_charsum(Session& s, const CharsumArgs& a) {
    const auto x = count_arg(a.x, "x");
    const auto y = count_arg(a.y, "y");
    const auto q = checked_modulus(count_arg(a.mod, "mod"));
    const CharacterGroup group(q);
    if (a.index && *a.index >= group.size())
        throw DomainError("--index must be below phi(q) = " + std::to_string(group.size()));
    const auto sums = psi_char_all(x, y, group, s.table(x));
    std::vector<Row> rows;
    for (std::uint64_t k = 0; k < group.size(); ++k) {
        if (a.index && k != *a.index) continue;
        Row row = character_columns(group.character(k));
        row.emplace_back("re", sums[k].real());
        row.emplace_back("im", sums[k].imag());
        rows.push_back(std::move(row));
    }
    emit(s.out(), s.format("csv"), rows, true);
    return kOk;
}

struct AverageArgs {
    std::string x, y, Q;
};

int cmd_average(Session& s, const AverageArgs& a, Shape which) {
    const auto x = count_arg(a.x, "x");
    const auto y = count_arg(a.y, "y");
    const auto Q = checked_modulus(count_arg(a.Q, "Q"));
    const CharacterGroups groups(Q);
    const ProgressionProfile profile(x, y, Q, groups, s.table(x), s.globals().threads);
    const double psi_val = static_cast<double>(profile.psi());
    const double lx = std::log(static_cast<double>(x));
    Row row{{"x", x}, {"y", y}, {"Q", Q}, {"u", lx / std::log(static_cast<double>(y))}, {"psi", profile.psi()}};
    bool ok;
    if (which == Shape::bv) {
        const double lhs = profile.bv_lhs(Q), form = profile.bv_char_form(Q);
        ok = lhs <= form * (1 + 1e-9) + 1e-9;
        append(row, {{"bv_lhs", lhs},
                     {"bv_char_form", form},
                     {"in_range", static_cast<double>(Q) <= std::sqrt(psi_val)},
                     {"majorant_holds", ok}});
    } else {
        const double lhs = profile.bdh_lhs(Q), form = profile.bdh_char_form(Q);
        const double rel = std::abs(lhs - form) / std::max({std::abs(lhs), std::abs(form), 1.0});
        ok = rel <= 1e-6;
        append(row, {{"bdh_lhs", lhs},
                     {"bdh_char_form", form},
                     {"relative_gap", rel},
                     {"in_range", static_cast<double>(Q) <= psi_val},
                     {"identity_holds", ok}});
    }
    emit(s.out(), s.format("csv"), {row}, false);
    if (!ok) s.err() << "invariant violated: see output\n";
    return ok ? kOk : kInvariant;
}

struct SieveArgs {
    std::uint64_t trials = 1000;
    std::uint64_t max_Q = 50;
    std::uint64_t max_N = 2000;
    bool catalog = false;
};

int cmd_large_sieve(Session& s, const SieveArgs& a) {
    if (a.max_Q < 1 || a.max_N < 1) throw DomainError("--max-Q and --max-N must be >= 1");
    checked_modulus(a.max_Q);
    const CharacterGroups groups(a.max_Q);
    const auto summary = run_sieve_trials(a.trials, a.max_Q, a.max_N, s.globals().seed, groups);
    std::uint64_t checked = summary.trials, violations = summary.violations;
    double max_ratio = summary.max_ratio;
    if (a.catalog) {
        for (const auto& nw : adversarial_catalog(a.max_Q, a.max_N, groups, s.table(10'000 + a.max_N))) {
            const auto r = large_sieve_check(nw.Q, nw.window, groups);
            ++checked;
            if (!r.ok) {
                ++violations;
                s.err() << "violation: " << nw.name << '\n';
            }
            max_ratio = std::max(max_ratio, r.ratio());
        }
    }
    Cell ratio = nullptr;
    if (checked > 0) ratio = max_ratio;
    emit(s.out(), s.format("csv"),
         {{{"status", std::string(violations == 0 ? "pass" : "fail")},
           {"windows", checked},
           {"violations", violations},
           {"max_ratio", ratio}}},
         false);
    return violations == 0 ? kOk : kInvariant;
}

struct PerronArgs {
    std::string x, y, mod;
    double height = 256;
    std::optional<std::uint64_t> nodes;
    double K = 1;
};

int cmd_perron(Session& s, const PerronArgs& a) {
    const auto x = count_arg(a.x, "x");
    const auto y = count_arg(a.y, "y");
    const auto q = checked_modulus(count_arg(a.mod, "mod"));
    const auto& table = s.table(x);
    ContourSpec contour = default_contour(x, y, a.height);
    if (a.nodes) contour.nodes = *a.nodes;
    const double budget = perron_truncation_budget(x, y, q, contour, table, a.K);
    const CharacterGroup group(q);
    std::vector<Row> rows;
    bool all_ok = true;
    for (const auto& chi : group.characters()) {
        const auto exact = psi_char(x, y, chi, table);
        const auto res = perron_psi_char(x, y, chi, contour, table);
        const double error = std::abs(res.approx - exact);
        const bool ok = error <= budget + res.quadrature_err;
        all_ok = all_ok && ok;
        Row row = character_columns(chi);
        append(row, {{"exact_re", exact.real()},
                     {"exact_im", exact.imag()},
                     {"approx_re", res.approx.real()},
                     {"approx_im", res.approx.imag()},
                     {"error", error},
                     {"budget", budget},
                     {"quadrature_err", res.quadrature_err},
                     {"ok", ok}});
        rows.push_back(std::move(row));
    }
    emit(s.out(), s.format("csv"), rows, true);
    return all_ok ? kOk : kInvariant;
}

struct SplitArgs {
    std::string x, y, mod;
    std::optional<std::string> threshold;
    std::optional<double> height;
};

int cmd_split(Session& s, const SplitArgs& a) {
    const auto x = count_arg(a.x, "x");
    const auto y = count_arg(a.y, "y");
    const auto q = checked_modulus(count_arg(a.mod, "mod"));
    const auto threshold = a.threshold ? count_arg(*a.threshold, "threshold")
                                       : static_cast<std::uint64_t>(std::floor(std::cbrt(static_cast<double>(x))));
    if (threshold < 1 || threshold >= x) throw DomainError("--threshold must lie in [1, x)");
    const auto& table = s.table(a.height ? 2 * x : x);

    // Every smooth n in (threshold, x] must split as m * cofactor with
    // threshold < m <= y * threshold and P(cofactor) <= p_1(m).
    std::uint64_t pairs = 0, bad = 0;
    for (std::uint64_t n = threshold + 1; n <= x; ++n) {
        if (!table.is_smooth(n, y)) continue;
        const auto sp = smooth_split(n, threshold, table);
        ++pairs;
        if (!sp || sp->m * sp->cofactor != n || sp->m <= threshold || sp->m > y * threshold ||
            (sp->cofactor > 1 && table.largest(sp->cofactor) > sp->least_of_m))
            ++bad;
    }

    const CharacterGroup group(q);
    std::vector<Row> rows;
    bool all_ok = bad == 0;
    for (const auto& chi : group.characters()) {
        const auto exact = psi_char(x, y, chi, table) - psi_char(threshold, y, chi, table);
        const auto assembled = split_character_sum(x, y, threshold, chi, table);
        const double error = std::abs(exact - assembled);
        const bool ok = error <= 1e-9 * std::max(1.0, std::abs(exact));
        all_ok = all_ok && ok;
        Row row = character_columns(chi);
        append(row, {{"pairs", pairs}, {"bad_splits", bad}, {"error", error}});
        if (a.height) {
            const auto sep = separation_check(x, y, threshold, chi, *a.height, table);
            all_ok = all_ok && sep.ok();
            append(row, {{"separation_error", sep.error}, {"separation_budget", sep.budget}});
        }
        row.emplace_back("ok", ok && bad == 0);
        rows.push_back(std::move(row));
    }
    emit(s.out(), s.format("csv"), rows, true);
    return all_ok ? kOk : kInvariant;
}

struct ExperimentArgs {
    std::string config;
    std::optional<std::string> output;
    std::string shape = "bv";
    bool timings = false;
};

int cmd_experiment(Session& s, const ExperimentArgs& a, const CLI::App& app) {
    auto cfg = load_config(a.config);
    const auto& g = s.globals();
    if (app.count("--seed")) cfg.seed = g.seed;
    if (app.count("--eta")) cfg.eta = g.eta;
    if (app.count("--threads")) cfg.threads = g.threads;
    if (!g.format.empty()) cfg.format = g.format == "csv" ? ReportFormat::csv : ReportFormat::json;
    if (a.output) cfg.output = *a.output;
    cfg.validate();

    const auto max_x = *std::max_element(cfg.x_grid.begin(), cfg.x_grid.end());
    const auto max_Q = *std::max_element(cfg.Q_grid.begin(), cfg.Q_grid.end());
    checked_modulus(max_Q);
    const auto& table = s.table(max_x);
    s.err() << "building character groups up to " << max_Q << "\n";
    const CharacterGroups groups(max_Q);
    const auto start = std::chrono::steady_clock::now();
    auto report = run_experiment(cfg, table, groups);
    if (a.timings)
        report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    s.err() << "experiment: " << report.records.size() << " records\n";

    auto write = [&](std::ostream& o) {
        if (cfg.format == ReportFormat::json)
            write_report_json(o, report);
        else
            write_report_csv(o, report, a.shape == "bdh" ? Shape::bdh : Shape::bv);
    };
    if (cfg.output.empty()) {
        write(s.out());
    } else {
        std::ofstream f(cfg.output);
        if (!f) throw IoError("cannot write report: " + cfg.output);
        write(f);
        if (!f) throw IoError("write failed: " + cfg.output);
    }
    return report.sieve.violations == 0 ? kOk : kInvariant;
}

int cmd_table(Session& s, std::uint64_t limit) {
    if (s.globals().cache.empty()) throw DomainError("table requires --table-cache");
    const auto& t = s.table(limit);
    s.out() << t.limit() << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Smooth numbers in arithmetic progressions: counts, character sums and averaged error bounds",
                 "smoothap"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    Globals g;
    std::string limit_text;
    app.add_option("--limit", limit_text, "factor table ceiling");
    app.add_option("--table-cache", g.cache, "factor table cache file");
    app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--eta", g.eta, "conductor bucket exponent");
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));

    PsiArgs psi_a;
    auto* psi_cmd = app.add_subcommand("psi", "count y-smooth n <= x");
    psi_cmd->add_option("x", psi_a.x)->required();
    psi_cmd->add_option("y", psi_a.y)->required();
    psi_cmd->add_option("--mod", psi_a.mod, "restrict to n coprime to q, or to a class with --res");
    psi_cmd->add_option("--res", psi_a.res, "residue class a (mod q)");
    psi_cmd->add_option("--interval", psi_a.interval, "count in (x, x + z] instead");

    AlphaArgs alpha_a;
    auto* alpha_cmd = app.add_subcommand("alpha", "saddle point and the estimates built on it");
    alpha_cmd->add_option("x", alpha_a.x)->required();
    alpha_cmd->add_option("y", alpha_a.y)->required();
    alpha_cmd->add_option("--tol", alpha_a.tol);
    alpha_cmd->add_flag("--psi", alpha_a.with_psi, "also count Psi(x, y) exactly");

    RhoArgs rho_a;
    auto* rho_cmd = app.add_subcommand("rho", "tabulate the Dickman function");
    rho_cmd->add_option("--u-max", rho_a.u_max);
    rho_cmd->add_option("--step", rho_a.step, "sampling step");

    CharsumArgs cs_a;
    auto* cs_cmd = app.add_subcommand("charsum", "smooth character sums for every character mod q");
    cs_cmd->add_option("x", cs_a.x)->required();
    cs_cmd->add_option("y", cs_a.y)->required();
    cs_cmd->add_option("--mod", cs_a.mod)->required();
    cs_cmd->add_option("--index", cs_a.index);

    AverageArgs bv_a, bdh_a;
    auto* bv_cmd = app.add_subcommand("bv", "max-over-classes error summed over q <= Q");
    bv_cmd->add_option("x", bv_a.x)->required();
    bv_cmd->add_option("y", bv_a.y)->required();
    bv_cmd->add_option("Q", bv_a.Q)->required();
    auto* bdh_cmd = app.add_subcommand("bdh", "squared errors summed over q <= Q and all classes");
    bdh_cmd->add_option("x", bdh_a.x)->required();
    bdh_cmd->add_option("y", bdh_a.y)->required();
    bdh_cmd->add_option("Q", bdh_a.Q)->required();

    SieveArgs ls_a;
    auto* ls_cmd = app.add_subcommand("large-sieve", "random and adversarial large sieve windows");
    ls_cmd->add_option("--trials", ls_a.trials);
    ls_cmd->add_option("--max-Q", ls_a.max_Q);
    ls_cmd->add_option("--max-N", ls_a.max_N);
    ls_cmd->add_flag("--catalog", ls_a.catalog, "also run the adversarial catalogue");

    PerronArgs pc_a;
    auto* pc_cmd = app.add_subcommand("perron-check", "contour reconstruction of Psi(x, y; chi)");
    pc_cmd->add_option("x", pc_a.x)->required();
    pc_cmd->add_option("y", pc_a.y)->required();
    pc_cmd->add_option("--mod", pc_a.mod)->required();
    pc_cmd->add_option("--height", pc_a.height, "length H of the vertical segment");
    pc_cmd->add_option("--nodes", pc_a.nodes, "Simpson intervals (even)");
    pc_cmd->add_option("--K", pc_a.K, "truncation constant");

    SplitArgs sc_a;
    auto* sc_cmd = app.add_subcommand("split-check", "n = m * cofactor decomposition of smooth numbers");
    sc_cmd->add_option("x", sc_a.x)->required();
    sc_cmd->add_option("y", sc_a.y)->required();
    sc_cmd->add_option("--mod", sc_a.mod)->required();
    sc_cmd->add_option("--threshold", sc_a.threshold, "default floor(x^(1/3))");
    sc_cmd->add_option("--height", sc_a.height, "also separate variables with a Perron cut of this height");

    ExperimentArgs ex_a;
    auto* ex_cmd = app.add_subcommand("experiment", "run a grid from a key=value config");
    ex_cmd->add_option("--config", ex_a.config)->required();
    ex_cmd->add_option("--output", ex_a.output);
    ex_cmd->add_option("--shape", ex_a.shape, "csv report shape")->check(CLI::IsMember({"bv", "bdh"}));
    ex_cmd->add_flag("--timings", ex_a.timings, "record runtime (breaks byte-identical reruns)");

    std::string table_limit;
    auto* tb_cmd = app.add_subcommand("table", "build a factor table into --table-cache");
    tb_cmd->add_option("N", table_limit)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (!limit_text.empty()) g.limit = count_arg(limit_text, "--limit");
        Session s(g, out, err);
        if (*psi_cmd) return cmd_psi(s, psi_a);
        if (*alpha_cmd) return cmd_alpha(s, alpha_a);
        if (*rho_cmd) return cmd_rho(s, rho_a);
        if (*cs_cmd) return cmd_charsum(s, cs_a);
        if (*bv_cmd) return cmd_average(s, bv_a, Shape::bv);
        if (*bdh_cmd) return cmd_average(s, bdh_a, Shape::bdh);
        if (*ls_cmd) return cmd_large_sieve(s, ls_a);
        if (*pc_cmd) return cmd_perron(s, pc_a);
        if (*sc_cmd) return cmd_split(s, sc_a);
        if (*ex_cmd) return cmd_experiment(s, ex_a, app);
        if (*tb_cmd) return cmd_table(s, count_arg(table_limit, "N"));
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return kCapacity;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace smoothap::cli
