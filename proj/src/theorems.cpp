#include "smoothap/theorems.hpp"

#include <cmath>

#include "smoothap/character_sums.hpp"
#include "smoothap/errors.hpp"
#include "smoothap/parallel.hpp"
#include "smoothap/smooth_count.hpp"

namespace smoothap {

namespace {

ModulusStats modulus_stats(std::span<const std::uint32_t> smooth, const CharacterGroup& group) {
    ModulusStats s;
    s.q = group.modulus();
    s.phi = group.size();
    const auto counts = residue_counts(smooth, s.q);
    for (std::uint32_t a : group.units()) s.psi_coprime += counts[a];

    // E(q, a) = (phi c_a - Psi_q) / phi, kept as an exact integer numerator.
    const auto phi = static_cast<__int128>(s.phi);
    const auto total = static_cast<__int128>(s.psi_coprime);
    __int128 sum_sq = 0;
    __int128 sum_abs = 0;
    __int128 max_abs = 0;
    for (std::uint32_t a : group.units()) {
        __int128 num = phi * static_cast<__int128>(counts[a]) - total;
        if (num < 0) num = -num;
        sum_sq += num * num;
        sum_abs += num;
        if (num > max_abs) max_abs = num;
    }
    const double phid = static_cast<double>(s.phi);
    s.max_error = static_cast<double>(max_abs) / phid;
    s.sum_abs_error = static_cast<double>(sum_abs) / phid;
    s.sum_sq_error = static_cast<double>(sum_sq) / (phid * phid);

    const auto sums = psi_char_all(counts, group);
    double abs_total = 0, sq_total = 0;
    for (std::size_t i = 1; i < sums.size(); ++i) {
        abs_total += std::abs(sums[i]);
        sq_total += std::norm(sums[i]);
    }
    s.char_abs = abs_total / phid;
    s.char_sq = sq_total / phid;
    return s;
}

double decay(double c, double u, double A, double log_x, double y) {
    const double l = std::log(u + 1);
    return std::exp(-c * u / (l * l)) / std::pow(log_x, A) + std::pow(y, -c);
}

}  // namespace

ProgressionProfile::ProgressionProfile(std::uint64_t x, std::uint64_t y, std::uint64_t max_Q,
                                       const CharacterGroups& groups, const FactorTable& table, unsigned threads)
    : x_(x), y_(y) {
    if (max_Q == 0) throw DomainError("ProgressionProfile: Q must be >= 1");
    groups.at(max_Q);
    const auto smooth = smooth_numbers(x, y, table);
    psi_ = smooth.size();
    stats_.resize(max_Q);
    parallel_for(max_Q, threads, [&](std::size_t i) { stats_[i] = modulus_stats(smooth, groups.at(i + 1)); });
}

const ModulusStats& ProgressionProfile::stats(std::uint64_t q) const {
    if (q == 0 || q > stats_.size()) throw CapacityError("ProgressionProfile: modulus outside profile");
    return stats_[q - 1];
}

template <class F>
double ProgressionProfile::prefix(std::uint64_t Q, F field) const {
    if (Q == 0 || Q > stats_.size()) throw CapacityError("ProgressionProfile: Q outside profile");
    double total = 0;
    for (std::uint64_t q = 1; q <= Q; ++q) total += field(stats_[q - 1]);
    return total;
}

double ProgressionProfile::bv_lhs(std::uint64_t Q) const {
    return prefix(Q, [](const ModulusStats& s) { return s.max_error; });
}
double ProgressionProfile::bdh_lhs(std::uint64_t Q) const {
    return prefix(Q, [](const ModulusStats& s) { return s.sum_sq_error; });
}
double ProgressionProfile::bv_char_form(std::uint64_t Q) const {
    return prefix(Q, [](const ModulusStats& s) { return s.char_abs; });
}
double ProgressionProfile::bdh_char_form(std::uint64_t Q) const {
    return prefix(Q, [](const ModulusStats& s) { return s.char_sq; });
}
double ProgressionProfile::bv_sum_all(std::uint64_t Q) const {
    return prefix(Q, [](const ModulusStats& s) { return s.sum_abs_error; });
}
double ProgressionProfile::trivial_bound(std::uint64_t Q) const {
    return prefix(Q, [](const ModulusStats& s) { return 2.0 * static_cast<double>(s.psi_coprime); });
}

double bv_lhs(std::uint64_t x, std::uint64_t y, std::uint64_t Q, const CharacterGroups& groups,
              const FactorTable& table) {
    return ProgressionProfile(x, y, Q, groups, table).bv_lhs(Q);
}
double bdh_lhs(std::uint64_t x, std::uint64_t y, std::uint64_t Q, const CharacterGroups& groups,
               const FactorTable& table) {
    return ProgressionProfile(x, y, Q, groups, table).bdh_lhs(Q);
}
double bv_char_form(std::uint64_t x, std::uint64_t y, std::uint64_t Q, const CharacterGroups& groups,
                    const FactorTable& table) {
    return ProgressionProfile(x, y, Q, groups, table).bv_char_form(Q);
}
double bdh_char_form(std::uint64_t x, std::uint64_t y, std::uint64_t Q, const CharacterGroups& groups,
                     const FactorTable& table) {
    return ProgressionProfile(x, y, Q, groups, table).bdh_char_form(Q);
}

double bv_rhs_shape(std::uint64_t x, std::uint64_t y, std::uint64_t Q, double c, double psi_val, double A) {
    const double log_x = std::log(static_cast<double>(x));
    const double u = log_x / std::log(static_cast<double>(y));
    return psi_val * decay(c, u, A, log_x, static_cast<double>(y)) +
           std::sqrt(psi_val) * static_cast<double>(Q) * std::pow(log_x, 3.5);
}

double bdh_rhs_shape(std::uint64_t x, std::uint64_t y, std::uint64_t Q, double c, double psi_val, double A) {
    const double log_x = std::log(static_cast<double>(x));
    const double u = log_x / std::log(static_cast<double>(y));
    return psi_val * psi_val * decay(c, u, A, log_x, static_cast<double>(y)) + psi_val * static_cast<double>(Q);
}

double TheoremInstance::rhs_shape(double c, double A) const {
    return which == Shape::bv ? bv_rhs_shape(x, y, Q, c, psi, A) : bdh_rhs_shape(x, y, Q, c, psi, A);
}

TheoremInstance make_instance(Shape which, const ProgressionProfile& profile, std::uint64_t Q) {
    TheoremInstance t;
    t.which = which;
    t.x = profile.x();
    t.y = profile.y();
    t.Q = Q;
    t.u = std::log(static_cast<double>(t.x)) / std::log(static_cast<double>(t.y));
    t.psi = static_cast<double>(profile.psi());
    t.lhs = which == Shape::bv ? profile.bv_lhs(Q) : profile.bdh_lhs(Q);
    t.char_form = which == Shape::bv ? profile.bv_char_form(Q) : profile.bdh_char_form(Q);
    return t;
}

double fit_constant(std::span<const TheoremInstance> instances, Shape which, double A) {
    if (instances.empty()) throw DomainError("fit_constant: no instances");
    for (const auto& t : instances)
        if (t.which != which) throw DomainError("fit_constant: instance of the other shape");
    auto feasible = [&](double c) {
        for (const auto& t : instances)
            if (t.lhs > t.rhs_shape(c, A)) return false;
        return true;
    };
    if (feasible(kMaxFittedC)) return kMaxFittedC;
    if (!feasible(0)) return 0;
    double lo = 0, hi = kMaxFittedC;
    while (hi - lo > kFitResolution) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace smoothap
