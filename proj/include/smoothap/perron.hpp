#pragma once

#include <cstdint>

#include "smoothap/characters.hpp"
#include "smoothap/factor_table.hpp"

namespace smoothap {

// Vertical segment sigma + i t, |t| <= height / 2, sampled by composite Simpson.
struct ContourSpec {
    double abscissa = 0;
    double height = 0;
    std::uint64_t nodes = 16;  // Simpson intervals; even, >= 16
};

struct PerronResult {
    ComplexValue approx;
    double quadrature_err = 0;  // |S(nodes) - S(2 nodes)|; approx is S(2 nodes)
};

// Simpson intervals for a segment of the given length carrying oscillation
// of angular frequency `freq`.
std::uint64_t recommended_nodes(double length, double freq);

// abscissa = alpha(x, y), nodes from recommended_nodes(H, log x + log y).
ContourSpec default_contour(std::uint64_t x, std::uint64_t y, double height);

// (1 / 2 pi i) int L(s, chi; y) x^s / s ds over the contour.
PerronResult perron_psi_char(std::uint64_t x, std::uint64_t y, const DirichletCharacter& chi,
                             const ContourSpec& contour, const FactorTable& table);

// K (x^sigma L(sigma, chi_0; y) / sqrt(H) + Psi(x / sqrt(H), y)), with chi_0 the
// principal character to the modulus of chi.
double perron_truncation_budget(std::uint64_t x, std::uint64_t y, std::uint64_t modulus, const ContourSpec& contour,
                                const FactorTable& table, double K = 1.0);

struct IndicatorResult {
    double approx = 0;
    double bound = 0;           // (1/T)(1/|log(w/v)| + sqrt(w/v))
    double quadrature_err = 0;
    int exact = 0;              // 1 if v < w else 0
};

// (1 / 2 pi i) int_{1/2 - iT}^{1/2 + iT} (w / v)^s ds / s, approximating [v < w].
// Throws DomainError if v == w, v <= 0, w <= 0 or T < 2.
IndicatorResult perron_indicator(double v, double w, double T, std::uint64_t nodes);
IndicatorResult perron_indicator(double v, double w, double T);

// Re-assembles sum over splits chi(m) chi(n) with both constraints mn <= x
// and P(n) <= p_1(m) replaced by perron_indicator weights at height T.
struct SeparationCheck {
    ComplexValue exact;
    ComplexValue assembled;
    double error = 0;
    double budget = 0;  // accumulated indicator bounds plus quadrature estimates
    std::uint64_t pairs = 0;
    bool ok() const { return error <= budget; }
};

SeparationCheck separation_check(std::uint64_t x, std::uint64_t y, std::uint64_t threshold,
                                 const DirichletCharacter& chi, double T, const FactorTable& table);

}  // namespace smoothap
