#include <doctest.h>

#include <set>

#include "kummer/puregaps.hpp"
#include "kummer/verify.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace kummer;

namespace {

const PlaceRef F1 = PlaceRef::finite(1);
const PlaceRef F2 = PlaceRef::finite(2);
const PlaceRef F3 = PlaceRef::finite(3);
const PlaceRef INF = PlaceRef::infinity();

const std::vector<GapTuple> record_set = fixtures::record_pure_gaps;

std::vector<int> indices(const PlaceSelection& sel) {
    std::vector<int> out;
    for (PlaceRef p : sel) out.push_back(p.index());
    return out;
}

} // namespace

TEST_CASE("pure gap tests on the record curve") {
    const KummerCurve c = new_curve(8, {3, 7, 7});
    const PlaceSelection sel{F1, F2};
    CHECK(is_pure_gap_oracle(c, sel, std::vector<Int>{1, 1}));
    CHECK_FALSE(is_pure_gap_oracle(c, sel, std::vector<Int>{3, 1}));
    CHECK(is_pure_gap(c, sel, std::vector<Int>{2, 9}));
    CHECK(is_pure_gap(c, sel, std::vector<Int>{10, 1}));
    CHECK_FALSE(is_pure_gap(c, sel, std::vector<Int>{2, 10}));
    CHECK_FALSE(is_pure_gap_oracle(c, sel, std::vector<Int>{2, 10}));
    CHECK_FALSE(is_pure_gap(c, sel, std::vector<Int>{8, 1}));
    CHECK_FALSE(is_pure_gap_oracle(c, sel, std::vector<Int>{1, 8}));
    CHECK_THROWS_AS(is_pure_gap(c, sel, std::vector<Int>{1}), Error);
    CHECK_THROWS_AS(is_pure_gap(new_curve(4, {2, 1}), PlaceSelection{F1}, std::vector<Int>{1}), Error);
}

TEST_CASE("record curve: full set, bottom set and caps") {
    const KummerCurve c = new_curve(8, {3, 7, 7});
    const PlaceSelection sel{F1, F2};
    CHECK(full_pure_gap_set(c, sel) == record_set);
    CHECK(full_pure_gap_set(c, sel) == oracle::pure_gaps_scan(8, {3, 7, 7}, {1, 2}));

    const BottomSet b = bottom_pure_gaps(c, sel);
    std::vector<GapTuple> expected_bottom;
    for (const GapTuple& t : record_set)
        if (t[0] <= 7 && t[1] <= 7) expected_bottom.push_back(t);
    CHECK(b.size() == 16);
    CHECK(b.tuples == expected_bottom);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b.tuples[i] == GapTuple{2, 1}) CHECK(b.caps[i] == 1);
        else CHECK(b.caps[i] == 0);
    }
    CHECK(expansion_cap(c, sel, std::vector<Int>{2, 1}) == 1);
    CHECK(b.tuples == bottom_pure_gaps_naive(c, sel).tuples);
}

TEST_CASE("caps are tight") {
    const KummerCurve c = new_curve(8, {3, 7, 7});
    const PlaceSelection sel{F1, F2};
    const BottomSet b = bottom_pure_gaps(c, sel);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t v = 0; v < 2; ++v) {
            GapTuple t = b.tuples[i];
            t[v] += 8 * (b.caps[i] + 1);
            CHECK_FALSE(oracle::pure_gap(8, {3, 7, 7}, {1, 2}, t));
            t[v] -= 8;
            CHECK(oracle::pure_gap(8, {3, 7, 7}, {1, 2}, t));
        }
}

TEST_CASE("curve(3,[4]*5) pure gaps") {
    const KummerCurve c = new_curve(3, {4, 4, 4, 4, 4});
    CHECK(full_pure_gap_set(c, PlaceSelection{F1, F2}) ==
          std::vector<GapTuple>{{1, 1}, {1, 2}, {1, 4}, {2, 1}, {4, 1}});
    CHECK(full_pure_gap_set(c, PlaceSelection{INF, F1, F2, F3}).empty());
    const std::vector<PlaceRef> finite{F1, F2, F3, PlaceRef::finite(4), PlaceRef::finite(5)};
    // Every selection of four finite places is empty.
    for (std::size_t skip = 0; skip < 5; ++skip) {
        std::vector<PlaceRef> four;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != skip) four.push_back(finite[i]);
        CHECK(bottom_pure_gaps(c, PlaceSelection(four)).size() == 0);
    }
    CHECK(full_pure_gap_set(new_curve(2, {1}), PlaceSelection{F1}).empty());
}

TEST_CASE("extend_pure_gap") {
    const KummerCurve c = new_curve(8, {3, 7, 7});
    const PlaceSelection sel{F1, F2};
    CHECK(extend_pure_gap(c, sel, std::vector<Int>{2}, 1));
    CHECK(extend_pure_gap(c, sel, std::vector<Int>{2}, 4));
    CHECK_FALSE(extend_pure_gap(c, sel, std::vector<Int>{2}, 5));
    // Hypothesis fails: (2,5) is not pure, so (2,6) cannot be decided this way.
    CHECK_THROWS_AS(extend_pure_gap(c, sel, std::vector<Int>{2}, 6), Error);
    CHECK_THROWS_AS(extend_pure_gap(c, sel, std::vector<Int>{3}, 1), Error);

    // Agreement with the criterion wherever the hypothesis holds.
    const auto curves = sample_curves(VerifyConfig{9, 5, 2, 9, 60, 3});
    for (const KummerCurve& cur : curves)
        for (const PlaceSelection& s : ordered_selections(cur, 3)) {
            if (s.size() < 2) continue;
            const PlaceSelection head = s.prefix(s.size() - 1);
            oracle::each_tuple(head.size(), 1, cur.m() - 1, [&](const oracle::Tuple& prefix) {
                if (!is_pure_gap(cur, head, prefix)) return;
                GapTuple full = prefix;
                full.push_back(1);
                for (Int a = 1; a <= cur.m() - 1; ++a) {
                    full.back() = a;
                    const bool expected = is_pure_gap(cur, s, full);
                    CHECK(extend_pure_gap(cur, s, prefix, a) == expected);
                    if (!expected) break;
                }
            });
        }
}

TEST_CASE("projection closure") {
    const KummerCurve c = new_curve(8, {3, 7, 7});
    const PlaceSelection sel{F1, F2};
    const std::vector<std::size_t> first{0};
    const ProjectedGap p = project_pure_gap(c, sel, std::vector<Int>{2, 9}, first);
    CHECK(p.tuple == GapTuple{2});
    CHECK(p.selection == PlaceSelection{F1});
    const std::vector<std::size_t> both{0, 1};
    CHECK(project_pure_gap(c, sel, std::vector<Int>{2, 9}, both).tuple == GapTuple{2, 9});
    const std::vector<std::size_t> second{1};
    CHECK(project_pure_gap(new_curve(3, {4, 4, 4, 4, 4}), sel, std::vector<Int>{1, 4}, second).tuple ==
          GapTuple{4});
    CHECK_THROWS_AS(project_pure_gap(c, sel, std::vector<Int>{3, 1}, first), Error);
}

TEST_CASE("expansion equals oracle scan on random curves") {
    const auto curves = sample_curves(VerifyConfig{7, 4, 2, 7, 60, 21});
    for (const KummerCurve& c : curves) {
        if (c.genus() > 8) continue;
        std::vector<Int> lambdas(c.lambdas().begin(), c.lambdas().end());
        for (const PlaceSelection& sel : ordered_selections(c, 3)) {
            const auto full = full_pure_gap_set(c, sel);
            CHECK(full == oracle::pure_gaps_scan(c.m(), lambdas, indices(sel)));
            for (const GapTuple& t : full)
                for (Int a : t) CHECK(a % c.m() != 0);
        }
    }
}

TEST_CASE("permutation equivariance") {
    const auto curves = sample_curves(VerifyConfig{8, 4, 2, 9, 40, 33});
    for (const KummerCurve& c : curves) {
        const auto places = c.totally_ramified_places();
        if (places.size() < 3) continue;
        const PlaceSelection abc{places[0], places[1], places[2]};
        const PlaceSelection cab{places[2], places[0], places[1]};
        std::set<GapTuple> permuted;
        for (const GapTuple& t : full_pure_gap_set(c, abc)) permuted.insert({t[2], t[0], t[1]});
        const auto direct = full_pure_gap_set(c, cab);
        CHECK(std::vector<GapTuple>(permuted.begin(), permuted.end()) == direct);
    }
    // Equal multiplicities: the set over finite places is symmetric.
    const KummerCurve c = new_curve(7, {2, 2, 2, 2});
    const auto set = full_pure_gap_set(c, PlaceSelection{F1, F2, F3});
    const std::set<GapTuple> as_set(set.begin(), set.end());
    for (const GapTuple& t : set) CHECK(as_set.count({t[1], t[2], t[0]}) == 1);
}

TEST_CASE("threads do not change results") {
    const KummerCurve c = new_curve(9, {1, 2, 4, 5, 7});
    const PlaceSelection sel{INF, F1, F2, F3};
    const BottomSet one = bottom_pure_gaps(c, sel, {1});
    const BottomSet four = bottom_pure_gaps(c, sel, {4});
    CHECK(one.tuples == four.tuples);
    CHECK(one.caps == four.caps);
    CHECK(full_pure_gap_set(c, sel, {3}) == full_pure_gap_set(c, sel, {1}));
}
