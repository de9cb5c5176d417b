#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace smoothap {

inline constexpr double kDefaultDickmanStep = 1e-4;
inline constexpr double kMaxDickmanU = 200.0;

// rho sampled on u = 0, step, 2 step, ..., u_max.
//
// rho = 1 on [0, 1]; beyond that u rho'(u) = -rho(u - 1) is integrated one
// cell at a time with the midpoint rule,
//   rho(u + h) = rho(u) - h * rho(u + h/2 - 1) / (u + h/2),
// where the delayed midpoint value is the mean of its two neighbouring grid
// values (exact for the linear interpolant). 1/step must be an integer so
// the delay lands on the grid.
class DickmanTable {
public:
    explicit DickmanTable(double u_max, double step = kDefaultDickmanStep);

    double step() const { return step_; }
    double u_max() const { return step_ * static_cast<double>(values_.size() - 1); }
    const std::vector<double>& values() const { return values_; }

    // Global error of the scheme is O(step^2); this is the advertised bound.
    double error_bound() const { return step_ * step_; }

    // Linear interpolation between grid points. Throws DomainError outside [0, u_max].
    double operator()(double u) const;

private:
    double step_;
    std::vector<double> values_;
};

double dickman_rho(double u, const DickmanTable& table);

// x * rho(log x / log y).
double hildebrand_estimate(std::uint64_t x, std::uint64_t y, const DickmanTable& table);

// CSV with header "u,rho", one row per multiple of sample_step in [0, u_max].
// sample_step must itself be a multiple of the table step.
void write_dickman_csv(std::ostream& out, const DickmanTable& table, double sample_step);

}  // namespace smoothap
