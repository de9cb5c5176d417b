#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace smoothap {

inline constexpr double kDefaultAlphaTolerance = 1e-10;

// Primes up to some bound with their logarithms, shared by the prime sums below.
class PrimeList {
public:
    explicit PrimeList(std::uint64_t bound);

    std::uint64_t bound() const { return bound_; }
    // Primes p <= y (y may not exceed bound()).
    std::span<const std::uint32_t> primes_to(std::uint64_t y) const;
    std::span<const double> logs_to(std::uint64_t y) const;

private:
    std::uint64_t bound_;
    std::vector<std::uint32_t> primes_;
    std::vector<double> logs_;
};

// alpha(x, y): root of sum_{p <= y} log p / (p^alpha - 1) = log x.
struct SaddlePoint {
    double alpha = 0.0;
    double residual = 0.0;  // |sum - log x| at the returned alpha
    std::uint64_t x = 0;
    std::uint64_t y = 0;
};

// Left side of the defining equation.
double saddle_prime_sum(double alpha, std::uint64_t y, const PrimeList& primes);

// Bisection on [0.01 / log x, 4]. The prime sum is strictly decreasing in
// alpha, blows up like pi(y)/alpha at the lower end, and is below log 3 at
// alpha = 4 for every y, so this interval brackets the root whenever x >= 3.
// If the bracket ever fails the upper end is doubled up to 64. The bisected
// root is polished by Newton steps (accepted only when they shrink the
// residual). Throws DomainError for x < 3, y < 2, tol <= 0; SolverError if no
// bracket exists in [1e-9, 64].
SaddlePoint solve_alpha(std::uint64_t x, std::uint64_t y, double tol, const PrimeList& primes);
SaddlePoint solve_alpha(std::uint64_t x, std::uint64_t y, double tol = kDefaultAlphaTolerance);

// zeta(s, y) = prod_{p <= y} (1 - p^-s)^-1 for real s > 0.
double zeta_smooth(double s, std::uint64_t y, const PrimeList& primes);
double zeta_smooth(double s, std::uint64_t y);

// x^alpha zeta(alpha, y) / (alpha sqrt(2 pi (1 + log x / y) log x log y)).
double ht_estimate(const SaddlePoint& sp, const PrimeList& primes);
double ht_estimate(const SaddlePoint& sp);

// x^alpha zeta(alpha, y): the Rankin upper bound for Psi(x, y).
double rankin_bound(const SaddlePoint& sp, const PrimeList& primes);

// 1 - log(u log u) / log y, valid for log x < y <= x^(1/3) and u log u > 1.
double alpha_approx(std::uint64_t x, std::uint64_t y);
// The same expression without domain checks.
double alpha_approx_formula(double u, double log_y);

}  // namespace smoothap
