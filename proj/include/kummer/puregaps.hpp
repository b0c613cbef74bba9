#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kummer/curve.hpp"

namespace kummer {

/// Pure gaps inside [1, m-1]^{s+1}, each with its cap k_a: a + m*k is a pure
/// gap for every k >= 0 with sum(k) <= k_a, and for no other shift.
struct BottomSet {
    PlaceSelection selection;
    std::vector<GapTuple> tuples; // lexicographic order
    std::vector<Int> caps;        // caps[i] belongs to tuples[i]

    std::size_t size() const noexcept { return tuples.size(); }
};

/// Knobs for the enumeration routines. Threads only split the candidate
/// space; the result is always sorted.
struct EnumerationOptions {
    unsigned threads = 1;
};

/// Thread count from KUMMER_THREADS (default 1).
EnumerationOptions default_enumeration_options();

/// Brute force: for every t in 0..m-1 the floor sum is negative, or it is
/// non-negative and no selected coordinate crosses a multiple of m at t.
bool is_pure_gap_oracle(const KummerCurve& c, const PlaceSelection& sel, std::span<const Int> tuple);

/// O(s*r) test: the floor sum at each critical shift -a_v*sigma_v is <= -1.
bool is_pure_gap(const KummerCurve& c, const PlaceSelection& sel, std::span<const Int> tuple);

/// Same two tests on a prebuilt kernel. The tuple is not validated; use
/// FloorSumKernel::check_tuple first when it comes from outside.
bool is_pure_gap_oracle(const FloorSumKernel& k, std::span<const Int> tuple) noexcept;
bool is_pure_gap(const FloorSumKernel& k, std::span<const Int> tuple) noexcept;

/// Bottom set built place by place: bottom gaps of the first place, then one
/// coordinate at a time with early termination on the congruence condition.
BottomSet bottom_pure_gaps(const KummerCurve& c, const PlaceSelection& sel,
                           const EnumerationOptions& opts = {});

/// Reference variant of bottom_pure_gaps without early termination: every
/// extension candidate is tested with is_pure_gap.
BottomSet bottom_pure_gaps_naive(const KummerCurve& c, const PlaceSelection& sel);

/// Cap k_a of a bottom pure gap.
Int expansion_cap(const KummerCurve& c, const PlaceSelection& sel, std::span<const Int> bottom_tuple);

/// Every shift a + m*k of the bottom set, sorted lexicographically.
std::vector<GapTuple> expand_bottom_set(const BottomSet& bottom, Int m);

/// Complete pure-gap set G_0 at the selection, sorted lexicographically.
std::vector<GapTuple> full_pure_gap_set(const KummerCurve& c, const PlaceSelection& sel,
                                        const EnumerationOptions& opts = {});

/// Whether `extension` appended to `known_prefix` is a pure gap at `sel`
/// (sel has one place more than the prefix), decided by one inequality.
/// The required hypothesis is that the prefix is pure at the shorter
/// selection when extension == 1, and that (prefix, extension - 1) is pure at
/// `sel` otherwise. `check_hypothesis` verifies it and throws
/// Errc::precondition when it fails. 1 <= extension <= m-1.
bool extend_pure_gap(const KummerCurve& c, const PlaceSelection& sel,
                     std::span<const Int> known_prefix, Int extension, bool check_hypothesis = true);

/// A pure gap restricted to some of its places.
struct ProjectedGap {
    PlaceSelection selection;
    GapTuple tuple;
};

/// Restricts `tuple` (required to be pure at `sel`) to the positions in
/// `indices`.
ProjectedGap project_pure_gap(const KummerCurve& c, const PlaceSelection& sel,
                              std::span<const Int> tuple, std::span<const std::size_t> indices);

} // namespace kummer
