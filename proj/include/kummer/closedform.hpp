#pragma once

#include <vector>

#include "kummer/curve.hpp"

namespace kummer {

// Explicit pure-gap sets for y^m = f(x)^lambda with deg f = r and
// gcd(r*lambda, m) = 1. None of these depend on lambda, so only m and r
// appear. Finite places are Q_1..Q_s; Infinity, when present, comes first.

/// Componentwise interval [lower, upper] of tuples that are all pure gaps.
struct PureGapBox {
    PlaceSelection selection;
    GapTuple lower;
    GapTuple upper;

    std::size_t width() const noexcept { return lower.size(); }
    /// Number of lattice points.
    Int volume() const;
    bool contains(std::span<const Int> tuple) const;
    /// Every lattice point, lexicographic order.
    std::vector<GapTuple> points() const;
};

/// G_0(Q_1, ..., Q_s), 2 <= s <= r.
std::vector<GapTuple> pure_gaps_finite(Int m, Int r, Int s);

/// G_0(Q_inf, Q_1, ..., Q_s) when m | r+1, 1 <= s <= r.
std::vector<GapTuple> pure_gaps_with_infinity_v(Int m, Int r, Int s);

/// G_0(Q_inf, Q_1, ..., Q_s) for any coprime m, r, 1 <= s <= r.
std::vector<GapTuple> pure_gaps_with_infinity_general(Int m, Int r, Int s);

/// Box {(mk + j_1, j_2, ..., j_s) : 1 <= j_i <= m - ceil((k+i)m/r)} at Q_1..Q_s.
PureGapBox family_box_finite(Int m, Int r, Int s, Int k);

/// Box {(mk + j_0, j_1, ..., j_s) : 1 <= j_i <= m - ceil((k+i+1)m/r)} at
/// Q_inf, Q_1..Q_s, for m | r+1.
PureGapBox family_box_infinity_v(Int m, Int r, Int s, Int k);

/// Box {mk - r*j0} x prod [1, t_i] at Q_inf, Q_1..Q_s, where mk - r*j0 must be
/// a gap at Q_inf.
PureGapBox family_box_infinity_general(Int m, Int r, Int s, Int k, Int j0);

/// Box [rc + r - s - 1, rc + r - 1] x prod [1, u(r-i) - c - 1] at
/// Q_inf, Q_1..Q_s, for m = ur + 1.
PureGapBox family_box_infinity_u(Int m, Int r, Int s, Int c);

} // namespace kummer
