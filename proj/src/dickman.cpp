#include "smoothap/dickman.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "smoothap/errors.hpp"

namespace smoothap {

namespace {

// Number of steps per unit; 1/step must be (numerically) an integer.
std::size_t steps_per_unit(double step) {
    const double inv = 1.0 / step;
    const double rounded = std::round(inv);
    if (rounded < 1 || std::abs(inv - rounded) > 1e-9 * rounded)
        throw DomainError("DickmanTable: 1/step must be a positive integer");
    return static_cast<std::size_t>(rounded);
}

}  // namespace

DickmanTable::DickmanTable(double u_max, double step) : step_(step) {
    if (!(step > 0) || step > 1) throw DomainError("DickmanTable: step must lie in (0, 1]");
    if (!(u_max >= 0) || u_max > kMaxDickmanU) throw DomainError("DickmanTable: u_max must lie in [0, 200]");
    const std::size_t per_unit = steps_per_unit(step);
    step_ = 1.0 / static_cast<double>(per_unit);
    const auto cells = static_cast<std::size_t>(std::ceil(u_max / step_ - 1e-9));
    values_.assign(cells + 1, 1.0);
    for (std::size_t i = per_unit; i < cells; ++i) {
        const double u_mid = (static_cast<double>(i) + 0.5) * step_;
        const double delayed = 0.5 * (values_[i - per_unit] + values_[i - per_unit + 1]);
        values_[i + 1] = values_[i] - step_ * delayed / u_mid;
    }
}

double DickmanTable::operator()(double u) const {
    if (!(u >= 0)) throw DomainError("dickman_rho: u must be >= 0");
    if (u <= 1) return 1.0;
    const double pos = u / step_;
    const auto k = static_cast<std::size_t>(pos);
    if (k + 1 >= values_.size()) {
        if (k + 1 == values_.size() && pos - static_cast<double>(k) < 1e-9) return values_.back();
        throw DomainError("dickman_rho: u beyond table range");
    }
    const double t = pos - static_cast<double>(k);
    return values_[k] * (1 - t) + values_[k + 1] * t;
}

double dickman_rho(double u, const DickmanTable& table) { return table(u); }

double hildebrand_estimate(std::uint64_t x, std::uint64_t y, const DickmanTable& table) {
    if (x < 1 || y < 2) throw DomainError("hildebrand_estimate: need x >= 1, y >= 2");
    const double u = std::log(static_cast<double>(x)) / std::log(static_cast<double>(y));
    return static_cast<double>(x) * table(std::max(u, 0.0));
}

void write_dickman_csv(std::ostream& out, const DickmanTable& table, double sample_step) {
    const double stride_d = sample_step / table.step();
    const auto stride = static_cast<std::size_t>(std::llround(stride_d));
    if (stride == 0 || std::abs(stride_d - static_cast<double>(stride)) > 1e-6)
        throw DomainError("write_dickman_csv: sample step must be a multiple of the table step");
    out << "u,rho\n" << std::setprecision(12);
    const auto& v = table.values();
    for (std::size_t i = 0; i < v.size(); i += stride)
        out << static_cast<double>(i) * table.step() << ',' << v[i] << '\n';
}

}  // namespace smoothap
