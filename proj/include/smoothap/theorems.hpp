#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "smoothap/characters.hpp"
#include "smoothap/factor_table.hpp"

namespace smoothap {

// Everything one modulus q contributes to the averaged progression errors
// E(q, a) = Psi(x, y; q, a) - Psi_q(x, y) / phi(q).
struct ModulusStats {
    std::uint64_t q = 1;
    std::uint64_t phi = 1;
    std::uint64_t psi_coprime = 0;
    double max_error = 0;        // max_{(a,q)=1} |E(q, a)|
    double sum_abs_error = 0;    // sum_{(a,q)=1} |E(q, a)|
    double sum_sq_error = 0;     // sum_{(a,q)=1} E(q, a)^2, from exact integer arithmetic
    double char_abs = 0;         // (1/phi) sum_{chi != chi_0} |Psi(x, y; chi)|
    double char_sq = 0;          // (1/phi) sum_{chi != chi_0} |Psi(x, y; chi)|^2
};

// Per-modulus statistics for all q <= max_Q at one (x, y). Prefix sums give
// every left-hand side for Q <= max_Q without recomputation.
class ProgressionProfile {
public:
    ProgressionProfile(std::uint64_t x, std::uint64_t y, std::uint64_t max_Q, const CharacterGroups& groups,
                       const FactorTable& table, unsigned threads = 1);

    std::uint64_t x() const { return x_; }
    std::uint64_t y() const { return y_; }
    std::uint64_t max_Q() const { return stats_.size(); }
    std::uint64_t psi() const { return psi_; }
    const ModulusStats& stats(std::uint64_t q) const;

    double bv_lhs(std::uint64_t Q) const;
    double bdh_lhs(std::uint64_t Q) const;
    double bv_char_form(std::uint64_t Q) const;
    double bdh_char_form(std::uint64_t Q) const;
    // sum_{q <= Q} sum_a |E(q, a)|, an upper bound for bv_lhs.
    double bv_sum_all(std::uint64_t Q) const;
    // sum_{q <= Q} 2 Psi_q(x, y).
    double trivial_bound(std::uint64_t Q) const;

private:
    template <class F>
    double prefix(std::uint64_t Q, F field) const;

    std::uint64_t x_, y_, psi_ = 0;
    std::vector<ModulusStats> stats_;
};

double bv_lhs(std::uint64_t x, std::uint64_t y, std::uint64_t Q, const CharacterGroups& groups,
              const FactorTable& table);
double bdh_lhs(std::uint64_t x, std::uint64_t y, std::uint64_t Q, const CharacterGroups& groups,
               const FactorTable& table);
double bv_char_form(std::uint64_t x, std::uint64_t y, std::uint64_t Q, const CharacterGroups& groups,
                    const FactorTable& table);
double bdh_char_form(std::uint64_t x, std::uint64_t y, std::uint64_t Q, const CharacterGroups& groups,
                     const FactorTable& table);

// Psi (e^(-c u / log^2(u+1)) / log^A x + y^-c) + sqrt(Psi) Q log^(7/2) x.  A = 0 is the effective shape.
double bv_rhs_shape(std::uint64_t x, std::uint64_t y, std::uint64_t Q, double c, double psi_val, double A = 0);
// Psi^2 (e^(-c u / log^2(u+1)) / log^A x + y^-c) + Psi Q.
double bdh_rhs_shape(std::uint64_t x, std::uint64_t y, std::uint64_t Q, double c, double psi_val, double A = 0);

enum class Shape { bv, bdh };

struct TheoremInstance {
    Shape which = Shape::bv;
    std::uint64_t x = 0, y = 0, Q = 0;
    double u = 0;
    double psi = 0;
    double lhs = 0;
    double char_form = 0;
    std::optional<double> fitted_c;

    double rhs_shape(double c, double A = 0) const;
};

TheoremInstance make_instance(Shape which, const ProgressionProfile& profile, std::uint64_t Q);

inline constexpr double kMaxFittedC = 2.0;
inline constexpr double kFitResolution = 1e-4;

// Largest c in (0, 2] with lhs <= rhs_shape(c, A) on every instance, to
// kFitResolution. Returns 0 when the shape fails already as c -> 0+.
// Throws DomainError on an empty list or mixed shapes.
double fit_constant(std::span<const TheoremInstance> instances, Shape which, double A = 0);

}  // namespace smoothap
