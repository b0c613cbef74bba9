#include <doctest.h>

#include <optional>
#include <random>

#include "kummer/gaps.hpp"
#include "oracle.hpp"

using namespace kummer;

namespace {

std::vector<Int> members(const GapSet& g) { return g.members; }

} // namespace

TEST_CASE("is_gap") {
    const KummerCurve c = new_curve(8, {3, 7, 7});
    CHECK(is_gap(c, PlaceRef::finite(1), 10));
    CHECK_FALSE(is_gap(c, PlaceRef::finite(1), 0));
    for (Int k = 1; k <= 5; ++k) CHECK_FALSE(is_gap(c, PlaceRef::finite(1), 8 * k));
    CHECK(is_gap(new_curve(3, {4, 4, 4, 4, 4}), PlaceRef::finite(1), 7));
    CHECK_THROWS_AS(is_gap(new_curve(4, {2, 1}), PlaceRef::finite(1), 1), Error);
}

TEST_CASE("gap sets of the reference curves") {
    CHECK(members(gap_set(new_curve(3, {4, 4, 4, 4, 4}), PlaceRef::finite(1))) == std::vector<Int>{1, 2, 4, 7});
    CHECK(members(gap_set(new_curve(3, {4, 4, 4, 4, 4}), PlaceRef::infinity())) == std::vector<Int>{1, 2, 4, 7});
    CHECK(gap_set(new_curve(2, {1}), PlaceRef::finite(1)).size() == 0);

    const KummerCurve c = new_curve(8, {3, 7, 7});
    const GapSet g1 = gap_set(c, PlaceRef::finite(1));
    CHECK(g1.size() == 7);
    for (Int a : {1, 2, 4, 5, 7, 10}) CHECK(g1.contains(a));
    CHECK(g1.members == oracle::gaps(8, {3, 7, 7}, 1));

    CHECK(members(gap_set(new_curve(9, {1, 1, 1, 1}), PlaceRef::infinity())) ==
          std::vector<Int>{1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19, 23});
}

TEST_CASE("bottom gaps carry their caps") {
    const KummerCurve c = new_curve(3, {4, 4, 4, 4, 4});
    const auto b = bottom_gaps(c, PlaceRef::finite(1));
    REQUIRE(b.size() == 2);
    CHECK(b[0].value == 1);
    CHECK(b[0].cap == 2); // 1, 4, 7
    CHECK(b[1].value == 2);
    CHECK(b[1].cap == 0);
}

TEST_CASE("gap set laws on random curves") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> pm(2, 12), pr(1, 6), pl(-9, 9);
    int tested = 0;
    while (tested < 250) {
        const Int m = pm(rng);
        std::vector<Int> lambdas(static_cast<std::size_t>(pr(rng)));
        for (Int& l : lambdas)
            do l = pl(rng);
            while (l == 0);
        std::optional<KummerCurve> c;
        try {
            c.emplace(m, lambdas);
        } catch (const Error&) {
            continue;
        }
        ++tested;
        const Int g = c->genus();
        for (PlaceRef p : c->totally_ramified_places()) {
            const GapSet gs = gap_set(*c, p);
            CHECK(static_cast<Int>(gs.size()) == g);
            CHECK(gs.members == gap_set_by_scan(*c, p).members);
            CHECK(gs.members == oracle::gaps(m, lambdas, p.index()));
            if (g >= 1) {
                CHECK(gs.members.front() == 1);
                CHECK(gs.members.back() <= 2 * g - 1);
            }
            for (Int a : gs.members) CHECK(a % m != 0);
        }
    }
}

TEST_CASE("closed-form gap sets") {
    CHECK(members(special_gap_set(3, 5, PlaceKind::finite)) == std::vector<Int>{1, 2, 4, 7});
    CHECK(members(novel_gap_set(3, 5, PlaceKind::finite)) == std::vector<Int>{1, 2, 4, 7});
    CHECK(members(novel_gap_set(3, 5, PlaceKind::infinite)) == std::vector<Int>{1, 2, 4, 7});
    const std::vector<Int> inf94{1, 2, 3, 5, 6, 7, 10, 11, 14, 15, 19, 23};
    CHECK(members(special_gap_set(9, 4, PlaceKind::infinite)) == inf94);
    CHECK(members(novel_gap_set(9, 4, PlaceKind::infinite, InfinityForm::u)) == inf94);
    CHECK_THROWS_AS(special_gap_set(4, 2, PlaceKind::finite), Error);
    CHECK_THROWS_AS(novel_gap_set(9, 4, PlaceKind::infinite, InfinityForm::v), Error);
    CHECK_THROWS_AS(novel_gap_set(7, 5, PlaceKind::infinite), Error);

    for (Int m = 2; m <= 20; ++m)
        for (Int r = 1; r <= 10; ++r) {
            if (std::gcd(m, r) != 1) continue;
            for (Int lambda : {Int{1}, Int{-1}}) {
                const KummerCurve c(m, std::vector<Int>(static_cast<std::size_t>(r), lambda));
                const auto fin = gap_set(c, PlaceRef::finite(1)).members;
                const auto inf = gap_set(c, PlaceRef::infinity()).members;
                CHECK(members(special_gap_set(m, r, PlaceKind::finite)) == fin);
                CHECK(members(novel_gap_set(m, r, PlaceKind::finite)) == fin);
                CHECK(members(special_gap_set(m, r, PlaceKind::infinite)) == inf);
                if ((r + 1) % m == 0) {
                    CHECK(members(novel_gap_set(m, r, PlaceKind::infinite, InfinityForm::v)) == inf);
                    CHECK(fin == inf);
                }
                if ((m - 1) % r == 0) CHECK(members(novel_gap_set(m, r, PlaceKind::infinite, InfinityForm::u)) == inf);
            }
        }
}

TEST_CASE("counting identity behind the closed forms") {
    for (Int m = 2; m <= 30; ++m)
        for (Int r = 1; r <= 20; ++r) {
            if (std::gcd(m, r) != 1) continue;
            Int total = 0;
            for (Int j = 1; j <= m - 1 - m / r; ++j) total += r - 1 - floor_div(r * j, m);
            CHECK(total == (r - 1) * (m - 1) / 2);
        }
}

TEST_CASE("floor bound equivalence used by the closed forms") {
    for (Int m = 2; m <= 15; ++m)
        for (Int r = 1; r <= 12; ++r) {
            if (std::gcd(m, r) != 1) continue;
            for (Int k = 1; k <= 2 * r - 1; ++k)
                for (Int j = 1 - m; j <= m - 1; ++j) {
                    const bool lhs = floor_div(r * j, m) <= r - k - 1;
                    const bool rhs = j <= m - ceil_div(k * m, r) - (k == r ? 1 : 0);
                    CHECK(lhs == rhs);
                }
        }
}
