#include "smoothap/perron.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

#include "smoothap/arith.hpp"
#include "smoothap/character_sums.hpp"
#include "smoothap/errors.hpp"
#include "smoothap/saddle.hpp"
#include "smoothap/smooth_count.hpp"

namespace smoothap {

namespace {

// Composite Simpson over [a, b] with n (even) intervals, and with 2n.
template <class F>
std::pair<ComplexValue, ComplexValue> simpson_pair(F&& f, double a, double b, std::uint64_t n) {
    const std::uint64_t fine = 2 * n;
    const double h = (b - a) / static_cast<double>(fine);
    // Fine grid values at even positions form the coarse grid.
    ComplexValue coarse_sum{0, 0}, fine_sum{0, 0};
    for (std::uint64_t k = 0; k <= fine; ++k) {
        const ComplexValue v = f(a + h * static_cast<double>(k));
        const double wf = (k == 0 || k == fine) ? 1 : (k % 2 ? 4 : 2);
        fine_sum += wf * v;
        if (k % 2 == 0) {
            const std::uint64_t c = k / 2;
            const double wc = (c == 0 || c == n) ? 1 : (c % 2 ? 4 : 2);
            coarse_sum += wc * v;
        }
    }
    return {coarse_sum * (2 * h / 3), fine_sum * (h / 3)};
}

struct EulerFactor {
    double log_p;
    ComplexValue coeff;  // chi(p) p^-sigma
};

}  // namespace

std::uint64_t recommended_nodes(double length, double freq) {
    // About 19 intervals per period of e^(i freq t) on the coarse grid.
    const double per_unit = 3.0 * std::max(freq, 1.0);
    auto n = static_cast<std::uint64_t>(std::ceil(length * per_unit));
    n = std::max<std::uint64_t>(n, 16);
    return n + (n % 2);
}

ContourSpec default_contour(std::uint64_t x, std::uint64_t y, double height) {
    const auto sp = solve_alpha(x, y);
    const double freq = std::log(static_cast<double>(x)) + std::log(static_cast<double>(y));
    return ContourSpec{sp.alpha, height, recommended_nodes(height, freq)};
}

PerronResult perron_psi_char(std::uint64_t x, std::uint64_t y, const DirichletCharacter& chi,
                             const ContourSpec& contour, const FactorTable& table) {
    table.require(x, "perron_psi_char");
    if (!(contour.abscissa > 0) || !(contour.height > 0) || contour.nodes < 16 || contour.nodes % 2)
        throw DomainError("perron_psi_char: invalid contour");

    std::vector<EulerFactor> factors;
    for (std::uint32_t p : primes_up_to(y)) {
        const ComplexValue v = chi.value(p);
        if (v == ComplexValue{0, 0}) continue;
        const double lp = std::log(static_cast<double>(p));
        factors.push_back({lp, v * std::exp(-contour.abscissa * lp)});
    }
    const double log_x = std::log(static_cast<double>(x));
    const double sigma = contour.abscissa;
    auto integrand = [&](double t) {
        ComplexValue l{1, 0};
        for (const auto& f : factors) l /= ComplexValue{1, 0} - f.coeff * std::polar(1.0, -t * f.log_p);
        const ComplexValue s{sigma, t};
        return l * std::exp(s * log_x) / s;
    };
    const double half = contour.height / 2;
    const auto [coarse, fine] = simpson_pair(integrand, -half, half, contour.nodes);
    const double norm = 1 / (2 * std::numbers::pi);
    return PerronResult{fine * norm, std::abs(fine - coarse) * norm};
}

double perron_truncation_budget(std::uint64_t x, std::uint64_t y, std::uint64_t modulus, const ContourSpec& contour,
                                const FactorTable& table, double K) {
    const double sigma = contour.abscissa;
    double log_l0 = 0;
    for (std::uint32_t p : primes_up_to(y)) {
        if (modulus % p == 0) continue;
        log_l0 -= std::log1p(-std::exp(-sigma * std::log(static_cast<double>(p))));
    }
    const double root_h = std::sqrt(contour.height);
    const double rankin = std::exp(sigma * std::log(static_cast<double>(x)) + log_l0);
    const auto shrunk = static_cast<std::uint64_t>(std::floor(static_cast<double>(x) / root_h));
    return K * (rankin / root_h + static_cast<double>(psi(shrunk, y, table)));
}

IndicatorResult perron_indicator(double v, double w, double T, std::uint64_t nodes) {
    if (!(v > 0) || !(w > 0)) throw DomainError("perron_indicator: v and w must be positive");
    if (v == w) throw DomainError("perron_indicator: v equals the threshold");
    if (!(T >= 2)) throw DomainError("perron_indicator: T must be >= 2");
    if (nodes < 16 || nodes % 2) throw DomainError("perron_indicator: nodes must be even and >= 16");

    const double log_r = std::log(w / v);
    const double root_r = std::sqrt(w / v);
    // Conjugate symmetry in t folds the segment onto [0, T]; the integrand is
    // (1/pi) Re(r^(1/2 + it) / (1/2 + it)).
    auto integrand = [&](double t) {
        const ComplexValue s{0.5, t};
        return ComplexValue{(root_r * std::polar(1.0, t * log_r) / s).real(), 0};
    };
    const auto [coarse, fine] = simpson_pair(integrand, 0, T, nodes);
    IndicatorResult r;
    r.approx = fine.real() / std::numbers::pi;
    r.quadrature_err = std::abs(fine.real() - coarse.real()) / std::numbers::pi;
    r.bound = (1 / std::abs(log_r) + root_r) / T;
    r.exact = v < w ? 1 : 0;
    return r;
}

IndicatorResult perron_indicator(double v, double w, double T) {
    return perron_indicator(v, w, T, recommended_nodes(T, std::abs(std::log(w / v))));
}

SeparationCheck separation_check(std::uint64_t x, std::uint64_t y, std::uint64_t threshold,
                                 const DirichletCharacter& chi, double T, const FactorTable& table) {
    if (threshold == 0 || threshold >= x) throw DomainError("separation_check: need 1 <= threshold < x");
    table.require(2 * x, "separation_check");

    SeparationCheck out;
    out.exact = split_character_sum(x, y, threshold, chi, table);

    const double x_half = static_cast<double>(x) + 0.5;
    std::unordered_map<std::uint64_t, IndicatorResult> size_weight;
    std::unordered_map<std::uint64_t, IndicatorResult> prime_weight;
    auto weight = [&](auto& cache, std::uint64_t key, double v, double w) -> const IndicatorResult& {
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, perron_indicator(v, w, T)).first;
        return it->second;
    };

    const auto smooth = smooth_numbers(2 * x, y, table);
    for (std::uint64_t m = threshold + 1; m <= std::min(x, y * threshold); ++m) {
        if (!table.is_smooth(m, y)) continue;
        const std::uint32_t p1 = table.smallest(m);
        if (m / p1 > threshold) continue;
        const ComplexValue chi_m = chi.value(m);
        for (std::uint32_t n : smooth) {
            if (static_cast<std::uint64_t>(n) * m > 2 * x) break;
            const ComplexValue chi_mn = chi_m * chi.value(n);
            const std::uint64_t mn = static_cast<std::uint64_t>(n) * m;
            const auto& w1 = weight(size_weight, mn, static_cast<double>(mn), x_half);
            const std::uint32_t big = table.largest(n);
            const auto& w2 = weight(prime_weight, (static_cast<std::uint64_t>(big) << 32) | p1,
                                    static_cast<double>(big), p1 + 0.5);
            out.assembled += chi_mn * (w1.approx * w2.approx);
            const double e1 = w1.bound + w1.quadrature_err;
            const double e2 = w2.bound + w2.quadrature_err;
            out.budget += std::abs(chi_mn) * (e1 * (w2.exact + e2) + w1.exact * e2);
            ++out.pairs;
        }
    }
    out.error = std::abs(out.assembled - out.exact);
    return out;
}

}  // namespace smoothap
