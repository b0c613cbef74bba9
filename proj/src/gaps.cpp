#include "kummer/gaps.hpp"

#include <algorithm>
#include <string>

namespace kummer {

namespace {

void require_totally_ramified(const KummerCurve& c, PlaceRef p) {
    PlaceSelection{p}.validate_for(c);
}

void require_coprime(Int m, Int r) {
    if (m < 2 || r < 1)
        throw Error(Errc::precondition, "closed forms need m >= 2 and r >= 1");
    if (std::gcd(m, r) != 1)
        throw Error(Errc::not_coprime, "closed forms need gcd(m, r) = 1 (m = " +
                                           std::to_string(m) + ", r = " + std::to_string(r) + ")");
}

// sum_{i=0}^r floor(-a*l*lambda_i/m); the shared part of the single-place test.
Int negated_sum(const KummerCurve& c, Int inv, Int a) {
    const Int m = c.m();
    const Int t = mod(-a * inv, m);
    Int acc = floor_div(t * c.lambda0(), m);
    for (Int l : c.lambdas()) acc += floor_div(t * l, m);
    return acc;
}

GapSet finish(PlaceRef p, std::vector<Int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return GapSet{p, std::move(values)};
}

PlaceRef representative(PlaceKind kind) {
    return kind == PlaceKind::finite ? PlaceRef::finite(1) : PlaceRef::infinity();
}

} // namespace

bool GapSet::contains(Int a) const {
    return std::binary_search(members.begin(), members.end(), a);
}

bool is_gap(const KummerCurve& c, PlaceRef p, Int a) {
    require_totally_ramified(c, p);
    if (a < 0 || a > FloorSumKernel::max_coordinate)
        throw Error(Errc::precondition, "gap candidate out of range: " + std::to_string(a));
    const Int inv = mod_inverse(c.multiplicity(p), c.m());
    // The shift -a*l is reduced mod m; the multiplicities sum to zero so the
    // floor sum only depends on its residue.
    return negated_sum(c, inv, a) + ceil_div(a, c.m()) <= -1;
}

std::vector<BottomGap> bottom_gaps(const KummerCurve& c, PlaceRef p) {
    require_totally_ramified(c, p);
    const Int inv = mod_inverse(c.multiplicity(p), c.m());
    std::vector<BottomGap> out;
    for (Int a = 1; a <= c.m() - 1; ++a) {
        const Int s = negated_sum(c, inv, a);
        if (s <= -2) out.push_back({a, -2 - s});
    }
    return out;
}

GapSet gap_set(const KummerCurve& c, PlaceRef p) {
    std::vector<Int> values;
    for (const BottomGap& b : bottom_gaps(c, p))
        for (Int k = 0; k <= b.cap; ++k) values.push_back(b.value + k * c.m());
    return finish(p, std::move(values));
}

GapSet gap_set_by_scan(const KummerCurve& c, PlaceRef p) {
    require_totally_ramified(c, p);
    std::vector<Int> values;
    for (Int a = 1; a <= 2 * c.genus() - 1; ++a)
        if (is_gap(c, p, a)) values.push_back(a);
    return finish(p, std::move(values));
}

GapSet special_gap_set(Int m, Int r, PlaceKind kind) {
    require_coprime(m, r);
    std::vector<Int> values;
    const Int j_max = m - 1 - floor_div(m, r);
    for (Int j = 1; j <= j_max; ++j) {
        if (kind == PlaceKind::finite) {
            for (Int k = 0; k <= r - 2 - floor_div(r * j, m); ++k) values.push_back(m * k + j);
        } else {
            for (Int k = ceil_div(r * j, m); k <= r - 1; ++k) values.push_back(m * k - r * j);
        }
    }
    return finish(representative(kind), std::move(values));
}

GapSet novel_gap_set(Int m, Int r, PlaceKind kind, InfinityForm form) {
    require_coprime(m, r);
    std::vector<Int> values;
    auto staircase = [&](Int k_max) {
        for (Int k = 0; k <= k_max; ++k)
            for (Int j = 1; j <= m - ceil_div((k + 1) * m, r); ++j) values.push_back(m * k + j);
    };

    if (kind == PlaceKind::finite) {
        staircase(r - 2 - floor_div(r, m));
        return finish(representative(kind), std::move(values));
    }

    const bool v_shape = (r + 1) % m == 0;
    const bool u_shape = (m - 1) % r == 0;
    if (form == InfinityForm::automatic) form = v_shape ? InfinityForm::v : InfinityForm::u;

    if (form == InfinityForm::v) {
        if (!v_shape)
            throw Error(Errc::precondition, "the mk+j form at infinity needs m | r+1");
        const Int v = (r + 1) / m;
        staircase(r - v - 1);
    } else {
        if (!u_shape)
            throw Error(Errc::precondition, "the mk-rj form at infinity needs r | m-1");
        const Int u = (m - 1) / r;
        for (Int k = 1; k <= r - 1; ++k)
            for (Int j = 1; j <= k * u; ++j) values.push_back(m * k - r * j);
    }
    return finish(representative(kind), std::move(values));
}

} // namespace kummer
