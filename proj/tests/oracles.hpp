#pragma once
// Slow, obviously-correct reference implementations used only by tests.
// Nothing here calls into the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 largest_prime_factor(u64 n) {
    if (n <= 1) return 1;
    u64 best = 1;
    for (u64 p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            best = p;
            n /= p;
        }
    return n > 1 ? n : best;
}

inline u64 smallest_prime_factor(u64 n) {
    if (n <= 1) return 1;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

inline bool is_prime(u64 n) { return n >= 2 && smallest_prime_factor(n) == n; }

inline u64 gcd(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline u64 phi(u64 n) {
    u64 c = 0;
    for (u64 k = 1; k <= n; ++k)
        if (gcd(k, n) == 1) ++c;
    return c;
}

inline bool smooth(u64 n, u64 y) { return largest_prime_factor(n) <= y; }

inline u64 psi(u64 x, u64 y) {
    u64 c = 0;
    for (u64 n = 1; n <= x; ++n) c += smooth(n, y);
    return c;
}

// Count of y-smooth n <= x accepted by pred(n).
template <class Pred>
u64 psi_if(u64 x, u64 y, Pred pred) {
    u64 c = 0;
    for (u64 n = 1; n <= x; ++n)
        if (smooth(n, y) && pred(n)) ++c;
    return c;
}

// All y-smooth n <= x, by recursive generation from the primes <= y.
inline void gen_smooth(u64 x, const std::vector<u64>& primes, std::size_t from, u64 n, std::vector<u64>& out) {
    out.push_back(n);
    for (std::size_t i = from; i < primes.size(); ++i) {
        if (n > x / primes[i]) break;
        gen_smooth(x, primes, i, n * primes[i], out);
    }
}

inline std::vector<u64> primes_to(u64 y) {
    std::vector<u64> ps;
    for (u64 p = 2; p <= y; ++p)
        if (is_prime(p)) ps.push_back(p);
    return ps;
}

// A character given by its full value table on residues 0..q-1.
struct Character {
    u64 q = 1;
    std::vector<std::complex<double>> values;
    std::complex<double> operator()(u64 n) const { return values[n % q]; }
};

// Every character mod q, found as the homomorphisms of the unit group:
// enumerate assignments on a generating set and keep the consistent ones.
// Only intended for small q.
inline std::vector<Character> all_characters(u64 q) {
    std::vector<u64> units;
    for (u64 a = 1; a <= q; ++a)
        if (gcd(a, q) == 1) units.push_back(a % q);
    const u64 h = units.size();
    const u64 L = [&] {
        // exponent of the group: lcm of element orders
        u64 e = 1;
        for (u64 a : units) {
            u64 ord = 1, v = a % q;
            while (v != 1 % q) {
                v = v * a % q;
                ++ord;
            }
            e = e / gcd(e, ord) * ord;
        }
        return e;
    }();
    // greedy generating set
    std::vector<u64> gens;
    std::vector<char> reached(q, 0);
    std::vector<u64> span{1 % q};
    reached[1 % q] = 1;
    for (u64 a : units) {
        if (reached[a]) continue;
        gens.push_back(a);
        std::vector<u64> next = span;
        for (std::size_t i = 0; i < next.size(); ++i) {
            const u64 v = next[i] * a % q;
            if (!reached[v]) {
                reached[v] = 1;
                next.push_back(v);
            }
        }
        // close under multiplication by all gens so far
        for (std::size_t i = 0; i < next.size(); ++i)
            for (u64 g : gens) {
                const u64 v = next[i] * g % q;
                if (!reached[v]) {
                    reached[v] = 1;
                    next.push_back(v);
                }
            }
        span = next;
    }
    std::vector<Character> out;
    std::vector<u64> ks(gens.size(), 0);
    auto root = [&](u64 k) { return std::polar(1.0, 2 * std::numbers::pi * double(k % L) / double(L)); };
    while (true) {
        // propagate values by BFS over words in the generators
        std::vector<long long> expo(q, -1);
        expo[1 % q] = 0;
        std::vector<u64> queue{1 % q};
        bool ok = true;
        for (std::size_t i = 0; i < queue.size() && ok; ++i)
            for (std::size_t j = 0; j < gens.size(); ++j) {
                const u64 v = queue[i] * gens[j] % q;
                const long long e = (expo[queue[i]] + static_cast<long long>(ks[j])) % static_cast<long long>(L);
                if (expo[v] < 0) {
                    expo[v] = e;
                    queue.push_back(v);
                } else if (expo[v] != e) {
                    ok = false;
                    break;
                }
            }
        if (ok) {
            Character c;
            c.q = q;
            c.values.assign(q, 0.0);
            for (u64 r = 0; r < q; ++r)
                if (expo[r] >= 0) c.values[r] = root(static_cast<u64>(expo[r]));
            if (q == 1) c.values[0] = 1.0;
            out.push_back(c);
        }
        std::size_t i = 0;
        while (i < ks.size() && ++ks[i] == L) ks[i++] = 0;
        if (i == ks.size()) break;
    }
    (void)h;
    return out;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    return std::abs(a - b) <= tol;
}

// Least f | q such that chi(n) = 1 whenever n = 1 (mod f) and gcd(n, q) = 1.
inline u64 conductor(const Character& chi) {
    const u64 q = chi.q;
    for (u64 f = 1; f <= q; ++f) {
        if (q % f) continue;
        bool ok = true;
        for (u64 n = 1; n < q && ok; ++n)
            if (gcd(n, q) == 1 && n % f == 1 % f && !close(chi(n), 1.0)) ok = false;
        if (ok) return f;
    }
    return q;
}

// alpha by plain bisection on the defining equation, 128 halvings.
inline double alpha_bisect(u64 x, u64 y) {
    const auto ps = primes_to(y);
    const long double lx = std::log(static_cast<long double>(x));
    auto f = [&](long double a) {
        long double s = 0;
        for (u64 p : ps) {
            const long double lp = std::log(static_cast<long double>(p));
            s += lp / (std::pow(static_cast<long double>(p), a) - 1);
        }
        return s - lx;
    };
    long double lo = 1e-6L, hi = 8;
    for (int i = 0; i < 128; ++i) {
        const long double mid = (lo + hi) / 2;
        (f(mid) > 0 ? lo : hi) = mid;
    }
    return static_cast<double>((lo + hi) / 2);
}

// rho via the integral form rho(u) = 1 - int_1^u rho(t - 1) / t dt, trapezoid rule.
inline double dickman_trapezoid(double u, double h) {
    const auto per = static_cast<std::size_t>(std::llround(1 / h));
    const auto n = static_cast<std::size_t>(std::llround(u / h));
    std::vector<double> r(n + 1, 1.0);
    for (std::size_t i = per + 1; i <= n; ++i) {
        const double t0 = double(i - 1) * h, t1 = double(i) * h;
        r[i] = r[i - 1] - h / 2 * (r[i - 1 - per] / t0 + r[i - per] / t1);
    }
    return r[n];
}

}  // namespace oracle
