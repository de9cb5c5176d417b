#include "smoothap/large_sieve.hpp"

#include <cmath>

#include "smoothap/errors.hpp"

namespace smoothap {

double CoefficientWindow::energy() const {
    double e = 0;
    for (const auto& a : values) e += std::norm(a);
    return e;
}

namespace {

double modulus_weight(const CharacterGroup& g) {
    return static_cast<double>(g.modulus()) / static_cast<double>(g.size());
}

}  // namespace

double large_sieve_lhs(std::uint64_t Q, const CoefficientWindow& w, const CharacterGroups& groups) {
    if (Q == 0) throw DomainError("large_sieve_lhs: Q must be >= 1");
    double total = 0;
    for (std::uint64_t q = 1; q <= Q; ++q) {
        const auto prim = groups.primitive_indices(q);
        if (prim.empty()) continue;
        const auto& g = groups.at(q);
        std::vector<ComplexValue> by_residue(q, ComplexValue{0, 0});
        for (std::uint64_t k = 0; k < w.length(); ++k) by_residue[(w.offset + 1 + k) % q] += w.values[k];

        double per_q = 0;
        for (std::uint64_t idx : prim) {
            const auto table = g.character(idx).exponent_table();
            ComplexValue s{0, 0};
            for (std::uint64_t r = 0; r < q; ++r)
                if (table[r] >= 0) s += by_residue[r] * g.root(static_cast<std::uint64_t>(table[r]));
            per_q += std::norm(s);
        }
        total += modulus_weight(g) * per_q;
    }
    return total;
}

double large_sieve_lhs_direct(std::uint64_t Q, const CoefficientWindow& w, const CharacterGroups& groups) {
    if (Q == 0) throw DomainError("large_sieve_lhs_direct: Q must be >= 1");
    double total = 0;
    for (std::uint64_t q = 1; q <= Q; ++q) {
        const auto& g = groups.at(q);
        double per_q = 0;
        for (std::uint64_t idx : groups.primitive_indices(q)) {
            const auto chi = g.character(idx);
            ComplexValue s{0, 0};
            for (std::uint64_t k = 0; k < w.length(); ++k) s += w.values[k] * chi.value(w.offset + 1 + k);
            per_q += std::norm(s);
        }
        total += modulus_weight(g) * per_q;
    }
    return total;
}

LargeSieveResult large_sieve_check(std::uint64_t Q, const CoefficientWindow& w, const CharacterGroups& groups) {
    LargeSieveResult r;
    r.lhs = large_sieve_lhs(Q, w, groups);
    const double n = static_cast<double>(w.length());
    const double qq = static_cast<double>(Q);
    r.rhs = (n + 3 * qq * qq) * w.energy();
    r.ok = r.lhs <= r.rhs;
    return r;
}

CoefficientWindow random_window(Rng& rng, std::uint64_t max_length, std::uint64_t max_offset) {
    CoefficientWindow w;
    w.offset = rng.integer(0, max_offset);
    const std::uint64_t n = rng.integer(1, std::max<std::uint64_t>(max_length, 1));
    w.values.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        const double re = rng.uniform(-1, 1);
        const double im = rng.uniform(-1, 1);
        w.values.emplace_back(re, im);
    }
    return w;
}

CoefficientWindow progression_window(std::uint64_t offset, std::uint64_t length, std::uint64_t modulus,
                                     std::uint64_t residue) {
    if (modulus == 0) throw DomainError("progression_window: modulus must be >= 1");
    CoefficientWindow w{offset, std::vector<ComplexValue>(length, ComplexValue{0, 0})};
    for (std::uint64_t k = 0; k < length; ++k)
        if ((offset + 1 + k) % modulus == residue % modulus) w.values[k] = 1.0;
    return w;
}

CoefficientWindow character_window(std::uint64_t offset, std::uint64_t length, const DirichletCharacter& chi) {
    CoefficientWindow w{offset, {}};
    w.values.reserve(length);
    for (std::uint64_t k = 0; k < length; ++k) w.values.push_back(std::conj(chi.value(offset + 1 + k)));
    return w;
}

CoefficientWindow smooth_window(std::uint64_t offset, std::uint64_t length, std::uint64_t y,
                                const FactorTable& table) {
    table.require(offset + length, "smooth_window");
    CoefficientWindow w{offset, {}};
    w.values.reserve(length);
    for (std::uint64_t k = 0; k < length; ++k)
        w.values.emplace_back(table.is_smooth(offset + 1 + k, y) ? 1.0 : 0.0, 0.0);
    return w;
}

std::vector<NamedWindow> adversarial_catalog(std::uint64_t max_Q, std::uint64_t max_N, const CharacterGroups& groups,
                                             const FactorTable& table) {
    std::vector<NamedWindow> out;
    const std::uint64_t Q = std::min(max_Q, groups.max_modulus());
    const std::uint64_t balanced = std::min(max_N, Q * Q);  // N comparable to Q^2

    for (std::uint64_t N : {max_N, balanced, std::min<std::uint64_t>(max_N, Q)}) {
        for (std::uint64_t modulus : {std::uint64_t{2}, std::uint64_t{6}, Q}) {
            out.push_back({"progression mod " + std::to_string(modulus) + " N=" + std::to_string(N), Q,
                           progression_window(0, N, modulus, 1)});
        }
        out.push_back({"constant N=" + std::to_string(N), Q, progression_window(0, N, 1, 0)});
    }

    // Correlate with one primitive character at a few moduli, where the sum
    // for that character is as large as it can be.
    for (std::uint64_t q0 : {Q, Q / 2, std::uint64_t{5}}) {
        if (q0 < 3) continue;
        const auto prim = groups.primitive_indices(q0);
        if (prim.empty()) continue;
        const auto chi = groups.at(q0).character(prim.front());
        for (std::uint64_t N : {max_N, balanced}) {
            out.push_back({"character mod " + std::to_string(q0) + " N=" + std::to_string(N), Q,
                           character_window(0, N, chi)});
            out.push_back({"character mod " + std::to_string(q0) + " N=" + std::to_string(N) + " Q=" +
                               std::to_string(q0),
                           q0, character_window(0, N, chi)});
        }
    }

    for (std::uint64_t y : {std::uint64_t{3}, std::uint64_t{7}, std::uint64_t{30}}) {
        for (std::uint64_t offset : {std::uint64_t{0}, std::uint64_t{10'000}}) {
            if (offset + max_N > table.limit()) continue;
            out.push_back({"smooth y=" + std::to_string(y) + " offset=" + std::to_string(offset), Q,
                           smooth_window(offset, max_N, y, table)});
        }
    }
    return out;
}

ConductorBuckets conductor_buckets(std::uint64_t x, std::uint64_t y, std::uint64_t Q, double eta,
                                   const CharacterGroups& groups) {
    if (!(eta > 0 && eta < 1)) throw DomainError("conductor_buckets: eta must lie in (0, 1)");
    if (x < 2 || y < 2) throw DomainError("conductor_buckets: need x, y >= 2");
    ConductorBuckets b;
    b.x = x;
    b.y = y;
    b.Q = Q;
    b.eta = eta;
    const double log_x = std::log(static_cast<double>(x));
    b.small_cutoff = std::min(std::pow(static_cast<double>(y), eta), std::exp(eta * std::sqrt(log_x)));
    b.large_cutoff = std::exp(eta * log_x);
    b.small_degenerate = b.small_cutoff < 2;
    b.large_degenerate = b.large_cutoff < 2;

    for (std::uint64_t r = 2; r <= Q; ++r) {
        const auto prim = groups.primitive_indices(r);
        if (prim.empty()) continue;
        const double rr = static_cast<double>(r);
        const int bucket = rr <= b.small_cutoff ? 0 : (rr <= b.large_cutoff ? 1 : 2);
        b.count[bucket] += prim.size();
        b.mass[bucket] += static_cast<double>(prim.size()) / static_cast<double>(groups.at(r).size());
    }
    return b;
}

}  // namespace smoothap
