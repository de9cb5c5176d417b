#include "smoothap/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "smoothap/arith.hpp"
#include "smoothap/errors.hpp"

namespace smoothap {

PrimeList::PrimeList(std::uint64_t bound) : bound_(bound), primes_(primes_up_to(bound)) {
    logs_.reserve(primes_.size());
    for (std::uint32_t p : primes_) logs_.push_back(std::log(static_cast<double>(p)));
}

std::span<const std::uint32_t> PrimeList::primes_to(std::uint64_t y) const {
    if (y > bound_) throw CapacityError("PrimeList: y " + std::to_string(y) + " exceeds bound " + std::to_string(bound_));
    const auto end = std::upper_bound(primes_.begin(), primes_.end(), y);
    return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

std::span<const double> PrimeList::logs_to(std::uint64_t y) const {
    return {logs_.data(), primes_to(y).size()};
}

double saddle_prime_sum(double alpha, std::uint64_t y, const PrimeList& primes) {
    long double sum = 0;
    for (double lp : primes.logs_to(y)) sum += lp / std::expm1(alpha * lp);
    return static_cast<double>(sum);
}

namespace {

// Derivative of the prime sum with respect to alpha.
double saddle_prime_sum_slope(double alpha, std::uint64_t y, const PrimeList& primes) {
    long double sum = 0;
    for (double lp : primes.logs_to(y)) {
        const double em1 = std::expm1(alpha * lp);
        sum -= lp * lp * (em1 + 1) / (em1 * em1);
    }
    return static_cast<double>(sum);
}

}  // namespace

SaddlePoint solve_alpha(std::uint64_t x, std::uint64_t y, double tol, const PrimeList& primes) {
    if (x < 3) throw DomainError("solve_alpha: x must be >= 3");
    if (y < 2) throw DomainError("solve_alpha: y must be >= 2");
    if (!(tol > 0)) throw DomainError("solve_alpha: tolerance must be positive");

    const double log_x = std::log(static_cast<double>(x));
    auto f = [&](double a) { return saddle_prime_sum(a, y, primes) - log_x; };

    double lo = 0.01 / log_x;
    double hi = 4.0;
    while (f(lo) <= 0) {
        lo /= 10;
        if (lo < 1e-9) throw SolverError("solve_alpha: no lower bracket above 1e-9");
    }
    while (f(hi) >= 0) {
        hi *= 2;
        if (hi > 64) throw SolverError("solve_alpha: no upper bracket below 64");
    }
    for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0 ? lo : hi) = mid;
    }
    double alpha = 0.5 * (lo + hi);
    double residual = std::abs(f(alpha));
    for (int it = 0; it < 4 && residual > 0; ++it) {
        const double next = alpha - f(alpha) / saddle_prime_sum_slope(alpha, y, primes);
        if (!(next > 0)) break;
        const double r = std::abs(f(next));
        if (r >= residual) break;
        alpha = next;
        residual = r;
    }
    return SaddlePoint{alpha, residual, x, y};
}

SaddlePoint solve_alpha(std::uint64_t x, std::uint64_t y, double tol) {
    return solve_alpha(x, y, tol, PrimeList(y));
}

double zeta_smooth(double s, std::uint64_t y, const PrimeList& primes) {
    if (!(s > 0)) throw DomainError("zeta_smooth: s must be positive");
    long double log_zeta = 0;
    for (double lp : primes.logs_to(y)) log_zeta -= std::log1p(-std::exp(-s * lp));
    return static_cast<double>(std::exp(log_zeta));
}

double zeta_smooth(double s, std::uint64_t y) { return zeta_smooth(s, y, PrimeList(y)); }

double ht_estimate(const SaddlePoint& sp, const PrimeList& primes) {
    const double log_x = std::log(static_cast<double>(sp.x));
    const double log_y = std::log(static_cast<double>(sp.y));
    const double scale =
        sp.alpha * std::sqrt(2 * std::numbers::pi * (1 + log_x / static_cast<double>(sp.y)) * log_x * log_y);
    return rankin_bound(sp, primes) / scale;
}

double ht_estimate(const SaddlePoint& sp) { return ht_estimate(sp, PrimeList(sp.y)); }

double rankin_bound(const SaddlePoint& sp, const PrimeList& primes) {
    const double log_x = std::log(static_cast<double>(sp.x));
    return std::exp(sp.alpha * log_x) * zeta_smooth(sp.alpha, sp.y, primes);
}

double alpha_approx_formula(double u, double log_y) {
    return 1 - std::log(u * std::log(u)) / log_y;
}

double alpha_approx(std::uint64_t x, std::uint64_t y) {
    if (x < 3 || y < 2) throw DomainError("alpha_approx: need x >= 3, y >= 2");
    const double log_x = std::log(static_cast<double>(x));
    const double log_y = std::log(static_cast<double>(y));
    if (!(static_cast<double>(y) > log_x)) throw DomainError("alpha_approx: requires y > log x");
    std::uint64_t y2 = 0;
    std::uint64_t y3 = 0;
    if (!checked_mul(y, y, y2) || !checked_mul(y2, y, y3) || y3 > x)
        throw DomainError("alpha_approx: requires y <= x^(1/3)");
    const double u = log_x / log_y;
    if (!(u * std::log(u) > 1)) throw DomainError("alpha_approx: requires u log u > 1");
    return alpha_approx_formula(u, log_y);
}

}  // namespace smoothap
