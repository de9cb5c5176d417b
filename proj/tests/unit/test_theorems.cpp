#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "shared.hpp"
#include "smoothap/errors.hpp"
#include "smoothap/smooth_count.hpp"
#include "smoothap/theorems.hpp"

using namespace smoothap;

namespace {

const CharacterGroups& groups() {
    static const CharacterGroups g(200);
    return g;
}

struct Naive {
    double bv = 0, bdh = 0, bv_form = 0, bdh_form = 0;
};

// Straight from the definitions with trial-division counts and the
// brute-force character tables.
Naive naive(std::uint64_t x, std::uint64_t y, std::uint64_t Q) {
    std::vector<std::uint64_t> smooth;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (oracle::smooth(n, y)) smooth.push_back(n);
    Naive r;
    for (std::uint64_t q = 1; q <= Q; ++q) {
        std::vector<double> cnt(q, 0);
        for (auto n : smooth) cnt[n % q] += 1;
        double coprime = 0, phi = 0;
        for (std::uint64_t a = 0; a < q; ++a)
            if (oracle::gcd(a, q) == 1) coprime += cnt[a], phi += 1;
        double mx = 0;
        for (std::uint64_t a = 0; a < q; ++a) {
            if (oracle::gcd(a, q) != 1) continue;
            const double e = cnt[a] - coprime / phi;
            mx = std::max(mx, std::abs(e));
            r.bdh += e * e;
        }
        r.bv += mx;
        for (const auto& chi : oracle::all_characters(q)) {
            bool principal = true;
            for (std::uint64_t a = 0; a < q; ++a)
                if (oracle::gcd(a, q) == 1 && !oracle::close(chi(a), 1.0)) principal = false;
            if (principal) continue;
            std::complex<double> s = 0;
            for (auto n : smooth) s += chi(n);
            r.bv_form += std::abs(s) / phi;
            r.bdh_form += std::norm(s) / phi;
        }
    }
    return r;
}

}  // namespace

TEST_CASE("left-hand sides against the definitions") {
    const auto& t = shared_table();
    for (auto [x, y, Q] : {std::tuple{20ull, 3ull, 4ull}, {500ull, 7ull, 12ull}, {3000ull, 13ull, 30ull}}) {
        const auto want = naive(x, y, Q);
        CHECK(bv_lhs(x, y, Q, groups(), t) == doctest::Approx(want.bv).epsilon(1e-12));
        CHECK(bdh_lhs(x, y, Q, groups(), t) == doctest::Approx(want.bdh).epsilon(1e-12));
        CHECK(bv_char_form(x, y, Q, groups(), t) == doctest::Approx(want.bv_form).epsilon(1e-9));
        CHECK(bdh_char_form(x, y, Q, groups(), t) == doctest::Approx(want.bdh_form).epsilon(1e-9));
    }
}

TEST_CASE("small examples") {
    const auto& t = shared_table();
    CHECK(bv_lhs(1000, 5, 1, groups(), t) == 0);
    CHECK(bdh_lhs(1000, 5, 1, groups(), t) == 0);
    CHECK(bv_char_form(1000, 5, 1, groups(), t) == 0);
    const ProgressionProfile p(20, 3, 4, groups(), t);
    // q = 4: residues 1, 3 hold 2 and 1 of the 3 odd smooth numbers
    CHECK(p.stats(4).max_error == doctest::Approx(0.5));
    CHECK(p.stats(4).sum_sq_error == doctest::Approx(0.5));
    // mod 3 also contributes: smooth numbers coprime to 3 are 1,2,4,8,16
    CHECK(p.bv_char_form(4) == doctest::Approx(1.0));
    CHECK(p.bv_lhs(4) == doctest::Approx(1.0));
    CHECK(p.bdh_lhs(4) == doctest::Approx(p.bdh_char_form(4)));
    CHECK_THROWS_AS(p.bv_lhs(5), CapacityError);
    CHECK_THROWS_AS(p.stats(0), CapacityError);
}

TEST_CASE("bridges and trivial bound over a grid") {
    const auto& t = shared_table();
    for (std::uint64_t x : {1000ull, 10'000ull, 100'000ull}) {
        for (std::uint64_t y : {10ull, 50ull, 300ull}) {
            const ProgressionProfile p(x, y, 200, groups(), t, 2);
            for (std::uint64_t Q : {1ull, 7ull, 50ull, 200ull}) {
                const double bdh = p.bdh_lhs(Q), form = p.bdh_char_form(Q);
                CHECK(std::abs(bdh - form) <= 1e-6 * std::max(1.0, std::abs(bdh)));
                CHECK(p.bv_lhs(Q) <= p.bv_char_form(Q) * (1 + 1e-9) + 1e-9);
                CHECK(p.bv_lhs(Q) <= p.bv_sum_all(Q) + 1e-9);
                double trivial = 0;
                for (std::uint64_t q = 1; q <= Q; ++q) trivial += 2.0 * double(psi_coprime(x, y, q, t));
                CHECK(p.bv_lhs(Q) <= trivial);
                CHECK(p.trivial_bound(Q) == doctest::Approx(trivial));
                CHECK(p.bv_lhs(Q) >= 0);
            }
        }
    }
}

TEST_CASE("profile is independent of thread count") {
    const auto& t = shared_table();
    const ProgressionProfile a(50'000, 40, 120, groups(), t, 1), b(50'000, 40, 120, groups(), t, 4);
    for (std::uint64_t Q : {1, 60, 120}) {
        CHECK(a.bv_lhs(Q) == b.bv_lhs(Q));
        CHECK(a.bdh_char_form(Q) == b.bdh_char_form(Q));
    }
}

TEST_CASE("rhs shapes") {
    const double psi_val = 1000, lx = std::log(1e6);
    // c -> 0: both exponentials tend to 1
    CHECK(bv_rhs_shape(1'000'000, 100, 100, 1e-12, psi_val) ==
          doctest::Approx(2 * psi_val + std::sqrt(psi_val) * 100 * std::pow(lx, 3.5)));
    CHECK(bdh_rhs_shape(1'000'000, 100, 100, 1e-12, psi_val) ==
          doctest::Approx(2 * psi_val * psi_val + psi_val * 100));
    // u = 1
    const double first = std::exp(-1 / std::pow(std::log(2.0), 2)) + 1.0 / 1000;
    CHECK(bv_rhs_shape(1000, 1000, 3, 1, psi_val) ==
          doctest::Approx(psi_val * first + std::sqrt(psi_val) * 3 * std::pow(std::log(1000.0), 3.5)));
    CHECK(bdh_rhs_shape(1000, 1000, 3, 1, psi_val) == doctest::Approx(psi_val * psi_val * first + psi_val * 3));
    // x = 10^6, y = 100, u = 3, c = 0.1
    const double f = std::exp(-0.1 * 3 / std::pow(std::log(4.0), 2)) + std::pow(100.0, -0.1);
    CHECK(bv_rhs_shape(1'000'000, 100, 100, 0.1, psi_val) ==
          doctest::Approx(psi_val * f + std::sqrt(psi_val) * 100 * std::pow(lx, 3.5)));
    CHECK(bdh_rhs_shape(1'000'000, 100, 100, 0.1, psi_val) == doctest::Approx(psi_val * psi_val * f + psi_val * 100));
    // log^A variants divide only the exponential term
    CHECK(bv_rhs_shape(1'000'000, 100, 100, 0.1, psi_val, 2) ==
          doctest::Approx(psi_val * (std::exp(-0.1 * 3 / std::pow(std::log(4.0), 2)) / (lx * lx) +
                                     std::pow(100.0, -0.1)) +
                          std::sqrt(psi_val) * 100 * std::pow(lx, 3.5)));
}

TEST_CASE("fit_constant") {
    TheoremInstance zero{Shape::bv, 1000, 10, 5, 3, 100, 0, 0, {}};
    CHECK(fit_constant(std::span(&zero, 1), Shape::bv) == kMaxFittedC);
    CHECK_THROWS_AS(fit_constant(std::span<const TheoremInstance>{}, Shape::bv), DomainError);
    CHECK_THROWS_AS(fit_constant(std::span(&zero, 1), Shape::bdh), DomainError);

    // lhs dominated by the second term alone: cap
    TheoremInstance small{Shape::bv, 1000, 10, 5, 3, 100, 10, 10, {}};
    CHECK(fit_constant(std::span(&small, 1), Shape::bv) == kMaxFittedC);

    // infeasible even at c -> 0
    TheoremInstance huge{Shape::bdh, 1000, 10, 5, 3, 100, 1e9, 1e9, {}};
    CHECK(fit_constant(std::span(&huge, 1), Shape::bdh) == 0);

    // an lhs set between rhs(2) and rhs(0): fit to resolution, and feasible
    TheoremInstance mid{Shape::bdh, 100'000, 10, 5, 0, 3000, 0, 0, {}};
    mid.u = std::log(1e5) / std::log(10.0);
    mid.lhs = mid.rhs_shape(0.7);
    const double c = fit_constant(std::span(&mid, 1), Shape::bdh);
    CHECK(c == doctest::Approx(0.7).epsilon(2e-4));
    CHECK(mid.lhs <= mid.rhs_shape(c));
}

TEST_CASE("fitted c shrinks as the grid grows") {
    const auto& t = shared_table();
    std::vector<TheoremInstance> bv, bdh;
    double prev_bv = 3, prev_bdh = 3;
    for (std::uint64_t x : {1000ull, 10'000ull, 100'000ull}) {
        for (std::uint64_t y : {10ull, 50ull}) {
            const ProgressionProfile p(x, y, 100, groups(), t);
            for (std::uint64_t Q : {10ull, 100ull}) {
                bv.push_back(make_instance(Shape::bv, p, Q));
                bdh.push_back(make_instance(Shape::bdh, p, Q));
                CHECK(bdh.back().lhs == doctest::Approx(bdh.back().char_form).epsilon(1e-6));
                CHECK(bv.back().lhs <= bv.back().char_form * (1 + 1e-9) + 1e-9);
            }
            const double cb = fit_constant(bv, Shape::bv), cd = fit_constant(bdh, Shape::bdh);
            CHECK(cb <= prev_bv);
            CHECK(cd <= prev_bdh);
            prev_bv = cb;
            prev_bdh = cd;
        }
    }
}
