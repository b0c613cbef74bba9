#include "kummer/closedform.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "kummer/gaps.hpp"

namespace kummer {

namespace {

void require_coprime(Int m, Int r) {
    if (m < 2 || r < 1) throw Error(Errc::precondition, "need m >= 2 and r >= 1");
    if (std::gcd(m, r) != 1)
        throw Error(Errc::not_coprime,
                    "need gcd(m, r) = 1 (m = " + std::to_string(m) + ", r = " + std::to_string(r) + ")");
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::precondition, what);
}

// Vectors j >= 1 (componentwise) for which some permutation sigma gives
// j_sigma(i) <= bounds[i] for every i. Sorting both sides descending reduces
// the existence of sigma to a componentwise check.
std::vector<GapTuple> permuted_staircase(std::vector<Int> bounds) {
    std::sort(bounds.begin(), bounds.end(), std::greater<>());
    const std::size_t n = bounds.size();
    std::vector<GapTuple> out;
    if (n == 0) return {GapTuple{}};
    if (bounds.back() < 1) return out;

    GapTuple desc(n);
    auto rec = [&](auto&& self, std::size_t pos, Int ceiling) -> void {
        if (pos == n) {
            GapTuple perm(desc.rbegin(), desc.rend()); // ascending
            do {
                out.push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (Int j = 1; j <= std::min(ceiling, bounds[pos]); ++j) {
            desc[pos] = j;
            self(self, pos + 1, j);
        }
    };
    rec(rec, 0, bounds.front());
    return out;
}

// Calls f(parts) for every vector of n non-negative integers summing to total.
template <typename F>
void for_each_composition(std::size_t n, Int total, F&& f) {
    std::vector<Int> parts(n, 0);
    if (n == 0) {
        if (total == 0) f(parts);
        return;
    }
    auto rec = [&](auto&& self, std::size_t pos, Int left) -> void {
        if (pos + 1 == n) {
            parts[pos] = left;
            f(parts);
            return;
        }
        for (Int k = 0; k <= left; ++k) {
            parts[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, total);
}

void sort_unique(std::vector<GapTuple>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Union over k of {m*k_i + j_i : sum k_i = k, j admissible under bounds(k)}.
std::vector<GapTuple> shifted_union(Int m, std::size_t width, Int k_max,
                                    const std::function<std::vector<Int>(Int)>& bounds) {
    std::vector<GapTuple> out;
    for (Int k = 0; k <= k_max; ++k) {
        const auto js = permuted_staircase(bounds(k));
        for_each_composition(width, k, [&](const std::vector<Int>& shifts) {
            for (const GapTuple& j : js) {
                GapTuple t(width);
                for (std::size_t i = 0; i < width; ++i) t[i] = m * shifts[i] + j[i];
                out.push_back(std::move(t));
            }
        });
    }
    sort_unique(out);
    return out;
}

// Bound for the finite coordinates next to a fixed infinity coordinate
// mk - r*j0, with the one-step drop where k + i hits r.
Int general_bound(Int m, Int r, Int k, Int i, Int j0) {
    const Int t = m - ceil_div((k + i) * m, r) + j0;
    return k + i == r ? t - 1 : t;
}

} // namespace

Int PureGapBox::volume() const {
    Int v = 1;
    for (std::size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i] + 1;
    return v;
}

bool PureGapBox::contains(std::span<const Int> tuple) const {
    if (tuple.size() != lower.size()) return false;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        if (tuple[i] < lower[i] || tuple[i] > upper[i]) return false;
    return true;
}

std::vector<GapTuple> PureGapBox::points() const {
    std::vector<GapTuple> out;
    GapTuple cur = lower;
    while (true) {
        out.push_back(cur);
        std::size_t i = cur.size();
        while (i > 0) {
            --i;
            if (cur[i] < upper[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lower[i];
            if (i == 0) return out;
        }
        if (cur.empty()) return out;
    }
}

std::vector<GapTuple> pure_gaps_finite(Int m, Int r, Int s) {
    require_coprime(m, r);
    require(s >= 2 && s <= r, "pure_gaps_finite needs 2 <= s <= r");
    const Int k_max = r - floor_div(r, m) - 1 - s;
    return shifted_union(m, static_cast<std::size_t>(s), k_max, [&](Int k) {
        std::vector<Int> t;
        for (Int i = 1; i <= s; ++i) t.push_back(m - ceil_div(m * (k + i), r));
        return t;
    });
}

std::vector<GapTuple> pure_gaps_with_infinity_v(Int m, Int r, Int s) {
    require_coprime(m, r);
    require((r + 1) % m == 0, "pure_gaps_with_infinity_v needs m | r+1");
    require(s >= 1 && s <= r, "pure_gaps_with_infinity_v needs 1 <= s <= r");
    const Int v = (r + 1) / m;
    const Int k_max = r - v - 1 - s;
    return shifted_union(m, static_cast<std::size_t>(s + 1), k_max, [&](Int k) {
        std::vector<Int> t;
        for (Int i = 0; i <= s; ++i) t.push_back(m - ceil_div(m * (k + i + 1), r));
        return t;
    });
}

std::vector<GapTuple> pure_gaps_with_infinity_general(Int m, Int r, Int s) {
    require_coprime(m, r);
    require(s >= 1 && s <= r, "pure_gaps_with_infinity_general needs 1 <= s <= r");
    std::vector<GapTuple> out;
    if (s >= r - floor_div(r, m)) return out;

    const std::size_t n = static_cast<std::size_t>(s);
    const Int j0_max = m - 1 - floor_div(m, r);
    for (Int j0 = 1; j0 <= j0_max; ++j0) {
        const Int k0_min = ceil_div(r * j0, m);
        // The bound t is only defined for k <= r - 1.
        const Int d = std::min(r - floor_div((1 - j0) * r, m) - s - 1, r - 1);
        for (Int k = k0_min; k <= d; ++k) {
            std::vector<Int> t;
            for (Int i = 1; i <= s; ++i) t.push_back(general_bound(m, r, k, i, j0));
            const auto js = permuted_staircase(std::move(t));
            if (js.empty()) continue;
            for (Int k0 = k0_min; k0 <= k; ++k0) {
                for_each_composition(n, k - k0, [&](const std::vector<Int>& shifts) {
                    for (const GapTuple& j : js) {
                        GapTuple tuple{m * k0 - r * j0};
                        for (std::size_t i = 0; i < n; ++i) tuple.push_back(m * shifts[i] + j[i]);
                        out.push_back(std::move(tuple));
                    }
                });
            }
        }
    }
    sort_unique(out);
    return out;
}

PureGapBox family_box_finite(Int m, Int r, Int s, Int k) {
    require_coprime(m, r);
    const Int b = r - floor_div(r, m);
    require(s >= 2 && s <= b - 1, "family_box_finite needs 2 <= s <= r - floor(r/m) - 1");
    require(k >= 0 && k <= b - 1 - s, "family_box_finite needs 0 <= k <= r - floor(r/m) - 1 - s");
    PureGapBox box{PlaceSelection::finite_range(static_cast<int>(s)), {}, {}};
    for (Int i = 1; i <= s; ++i) {
        const Int t = m - ceil_div((k + i) * m, r);
        require(t >= 1, "empty box side");
        box.lower.push_back(i == 1 ? m * k + 1 : 1);
        box.upper.push_back(i == 1 ? m * k + t : t);
    }
    return box;
}

PureGapBox family_box_infinity_v(Int m, Int r, Int s, Int k) {
    require_coprime(m, r);
    require((r + 1) % m == 0, "family_box_infinity_v needs m | r+1");
    const Int v = (r + 1) / m;
    require(s >= 1 && s <= r - v - 1, "family_box_infinity_v needs 1 <= s <= r - v - 1");
    require(k >= 0 && k <= r - v - 1 - s, "family_box_infinity_v needs 0 <= k <= r - v - 1 - s");
    PureGapBox box{PlaceSelection::infinity_then_finite(static_cast<int>(s)), {}, {}};
    for (Int i = 0; i <= s; ++i) {
        const Int t = m - ceil_div(m * (k + i + 1), r);
        require(t >= 1, "empty box side");
        box.lower.push_back(i == 0 ? m * k + 1 : 1);
        box.upper.push_back(i == 0 ? m * k + t : t);
    }
    return box;
}

PureGapBox family_box_infinity_general(Int m, Int r, Int s, Int k, Int j0) {
    require_coprime(m, r);
    require(s >= 1 && s <= r, "family_box_infinity_general needs 1 <= s <= r");
    require(k >= 1 && k <= r - 1, "family_box_infinity_general needs 1 <= k <= r - 1");
    require(j0 >= 1 && j0 <= m - 1, "family_box_infinity_general needs 1 <= j0 <= m - 1");
    const Int head = m * k - r * j0;
    require(head >= 1 && special_gap_set(m, r, PlaceKind::infinite).contains(head),
            "mk - r*j0 = " + std::to_string(head) + " is not a gap at infinity");
    PureGapBox box{PlaceSelection::infinity_then_finite(static_cast<int>(s)), {head}, {head}};
    for (Int i = 1; i <= s; ++i) {
        const Int t = general_bound(m, r, k, i, j0);
        require(t >= 1, "empty box side at coordinate " + std::to_string(i));
        box.lower.push_back(1);
        box.upper.push_back(t);
    }
    return box;
}

PureGapBox family_box_infinity_u(Int m, Int r, Int s, Int c) {
    require_coprime(m, r);
    require((m - 1) % r == 0, "family_box_infinity_u needs r | m-1");
    const Int u = (m - 1) / r;
    require(s >= 1 && s <= r - 2, "family_box_infinity_u needs 1 <= s <= r - 2");
    require(c >= 0 && c <= u * (r - s - 1) - 1, "family_box_infinity_u needs 0 <= c <= u(r-s-1) - 1");
    PureGapBox box{PlaceSelection::infinity_then_finite(static_cast<int>(s)),
                   {r * c + r - s - 1},
                   {r * c + r - 1}};
    for (Int i = 1; i <= s; ++i) {
        box.lower.push_back(1);
        box.upper.push_back(u * (r - i) - c - 1);
    }
    return box;
}

} // namespace kummer
