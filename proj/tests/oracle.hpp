#pragma once

// Brute-force references for the tests. They work from the raw (m, lambdas)
// data only and never touch FloorSumKernel or the enumeration code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using I = std::int64_t;
using Tuple = std::vector<I>;

inline I fdiv(I a, I b) {
    I q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline I cdiv(I a, I b) { return -fdiv(-a, b); }

// multiplicities[0] is lambda_0 = -sum(lambdas); places are indices into it.
inline std::vector<I> multiplicities(const std::vector<I>& lambdas) {
    std::vector<I> out{0};
    for (I l : lambdas) {
        out.push_back(l);
        out[0] -= l;
    }
    return out;
}

inline I genus(I m, const std::vector<I>& lambdas) {
    const auto mu = multiplicities(lambdas);
    I num = m * (static_cast<I>(lambdas.size()) - 1) + 2;
    for (I l : mu) num -= std::gcd(m, l);
    return num / 2;
}

// For every t in 0..m-1: either the floor sum is negative, or no selected
// coordinate a_i + t*mu_i crosses a multiple of m.
inline bool pure_gap(I m, const std::vector<I>& lambdas, const std::vector<int>& places, const Tuple& a) {
    const auto mu = multiplicities(lambdas);
    for (I t = 0; t < m; ++t) {
        I sum = 0;
        for (std::size_t j = 0; j < mu.size(); ++j) {
            I extra = 0;
            for (std::size_t i = 0; i < places.size(); ++i)
                if (places[i] == static_cast<int>(j)) extra = a[i];
            sum += fdiv(extra + t * mu[j], m);
        }
        if (sum < 0) continue;
        for (std::size_t i = 0; i < places.size(); ++i) {
            const I x = a[i] + t * mu[static_cast<std::size_t>(places[i])];
            if (fdiv(x, m) != fdiv(x - 1, m)) return false;
        }
    }
    return true;
}

inline std::vector<I> gaps(I m, const std::vector<I>& lambdas, int place) {
    std::vector<I> out;
    const I g = genus(m, lambdas);
    for (I a = 1; a <= 2 * g - 1; ++a)
        if (pure_gap(m, lambdas, {place}, {a})) out.push_back(a);
    return out;
}

// Calls f(t) for every t in [lo, hi]^width, lexicographic.
template <typename F>
void each_tuple(std::size_t width, I lo, I hi, F&& f) {
    if (hi < lo) return;
    Tuple t(width, lo);
    while (true) {
        f(t);
        std::size_t i = width;
        while (true) {
            if (i == 0) return;
            --i;
            if (t[i] < hi) {
                ++t[i];
                break;
            }
            t[i] = lo;
        }
    }
}

inline std::vector<Tuple> pure_gaps_scan(I m, const std::vector<I>& lambdas, const std::vector<int>& places) {
    std::vector<Tuple> out;
    const I g = genus(m, lambdas);
    each_tuple(places.size(), 1, 2 * g - 1, [&](const Tuple& t) {
        if (pure_gap(m, lambdas, places, t)) out.push_back(t);
    });
    return out;
}

// Closed-form unions enumerated literally: every j in the box [1, max t]^s,
// every permutation sigma tried, every composition of k walked.
inline bool some_permutation_fits(const Tuple& j, const std::vector<I>& bounds) {
    std::vector<std::size_t> sigma(j.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < j.size() && ok; ++i) ok = j[sigma[i]] >= 1 && j[sigma[i]] <= bounds[i];
        if (ok) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

template <typename F>
void compositions(std::size_t n, I total, F&& f) {
    each_tuple(n, 0, total, [&](const Tuple& p) {
        I s = 0;
        for (I v : p) s += v;
        if (s == total) f(p);
    });
}

inline std::vector<Tuple> finite_union(I m, I r, I s) {
    std::set<Tuple> out;
    for (I k = 0; k <= r - r / m - 1 - s; ++k) {
        std::vector<I> b;
        for (I i = 1; i <= s; ++i) b.push_back(m - cdiv(m * (k + i), r));
        const I top = *std::max_element(b.begin(), b.end());
        each_tuple(static_cast<std::size_t>(s), 1, top, [&](const Tuple& j) {
            if (!some_permutation_fits(j, b)) return;
            compositions(static_cast<std::size_t>(s), k, [&](const Tuple& ks) {
                Tuple t(j.size());
                for (std::size_t i = 0; i < t.size(); ++i) t[i] = m * ks[i] + j[i];
                out.insert(t);
            });
        });
    }
    return {out.begin(), out.end()};
}

inline std::vector<Tuple> infinity_v_union(I m, I r, I s) {
    std::set<Tuple> out;
    const I v = (r + 1) / m;
    for (I k = 0; k <= r - v - 1 - s; ++k) {
        std::vector<I> b;
        for (I i = 0; i <= s; ++i) b.push_back(m - cdiv(m * (k + i + 1), r));
        const I top = *std::max_element(b.begin(), b.end());
        each_tuple(static_cast<std::size_t>(s + 1), 1, top, [&](const Tuple& j) {
            if (!some_permutation_fits(j, b)) return;
            compositions(static_cast<std::size_t>(s + 1), k, [&](const Tuple& ks) {
                Tuple t(j.size());
                for (std::size_t i = 0; i < t.size(); ++i) t[i] = m * ks[i] + j[i];
                out.insert(t);
            });
        });
    }
    return {out.begin(), out.end()};
}

} // namespace oracle
