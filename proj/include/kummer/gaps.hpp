#pragma once

#include <vector>

#include "kummer/curve.hpp"

namespace kummer {

/// Weierstrass gap set G(Q) at one totally ramified place, ascending.
struct GapSet {
    PlaceRef place = PlaceRef::infinity();
    std::vector<Int> members;

    std::size_t size() const noexcept { return members.size(); }
    bool contains(Int a) const;
};

enum class PlaceKind { finite, infinite };

/// Which closed form to use for G(Q_inf) when all multiplicities agree:
/// `v` needs m | r+1, `u` needs r | m-1, `automatic` picks the first that
/// applies.
enum class InfinityForm { automatic, v, u };

/// a in G(Q) iff sum_{i=0}^r floor(-a*l*lambda_i/m) + ceil(a/m) <= -1, l the
/// inverse of the multiplicity of Q modulo m.
bool is_gap(const KummerCurve& c, PlaceRef p, Int a);

/// Bottom gaps in [1, m-1] followed by expansion a + k*m, 0 <= k <= k_a.
GapSet gap_set(const KummerCurve& c, PlaceRef p);

/// Same set found by testing every a in [1, 2g-1] with is_gap.
GapSet gap_set_by_scan(const KummerCurve& c, PlaceRef p);

/// Bottom gaps of Q with their expansion caps k_a.
struct BottomGap {
    Int value;
    Int cap;
};
std::vector<BottomGap> bottom_gaps(const KummerCurve& c, PlaceRef p);

/// Gap set of an equal-multiplicity curve with r branch places (gcd(m, r) = 1),
/// enumerated from the two-parameter index description.
GapSet special_gap_set(Int m, Int r, PlaceKind kind);

/// Same set via the staircase description: finite form for any coprime (m, r);
/// infinite forms for m | r+1 (mk + j) or r | m-1 (mk - rj).
GapSet novel_gap_set(Int m, Int r, PlaceKind kind, InfinityForm form = InfinityForm::automatic);

} // namespace kummer
