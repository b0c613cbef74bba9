#pragma once

// Expected code parameters of the four stored tables, one entry per row.

#include <cstdint>
#include <vector>

namespace fixtures {

struct Triple {
    std::int64_t n, k, d;
    bool operator==(const Triple&) const = default;
};

struct Expected {
    std::int64_t q, t, m, s, k;
    Triple code;
    int improvement;
};

inline const std::vector<Expected> table1{
    {8, 2, 9, 2, 5, {511, 445, 42}, 3}, {8, 2, 9, 3, 4, {510, 459, 30}, 2}, {8, 2, 3, 2, 3, {175, 161, 10}, 1},
    {9, 2, 5, 2, 5, {368, 331, 24}, 2}, {9, 2, 5, 3, 4, {367, 338, 18}, 1}, {5, 2, 3, 2, 1, {64, 59, 4}, 0},
};
inline const std::vector<Expected> table2{
    {8, 2, 9, 1, 5, {511, 445, 42}, 3}, {8, 2, 9, 2, 4, {510, 459, 30}, 2}, {8, 2, 3, 1, 3, {175, 161, 10}, 1},
    {9, 2, 5, 1, 5, {368, 331, 24}, 2}, {9, 2, 5, 2, 4, {367, 338, 18}, 1}, {5, 2, 3, 1, 1, {64, 59, 4}, 0},
};
inline const std::vector<Expected> table3{
    {5, 0, 6, 2, 2, {124, 106, 12}, 1}, {7, 0, 8, 2, 4, {342, 295, 30}, 3}, {7, 0, 4, 2, 3, {174, 156, 12}, 1},
    {8, 0, 9, 2, 5, {511, 445, 42}, 3}, {8, 0, 3, 2, 3, {175, 161, 10}, 1}, {9, 0, 5, 2, 5, {368, 331, 24}, 2},
    {9, 0, 5, 3, 4, {367, 338, 18}, 1}, {9, 0, 2, 2, 2, {152, 145, 6}, 0},
};
inline const std::vector<Expected> table4{
    {5, 0, 6, 1, 2, {124, 106, 12}, 1}, {7, 0, 8, 1, 4, {342, 295, 30}, 3}, {7, 0, 4, 1, 3, {174, 156, 12}, 1},
    {8, 0, 9, 1, 5, {511, 445, 42}, 3}, {8, 0, 3, 1, 3, {175, 161, 10}, 1}, {9, 0, 5, 1, 5, {368, 331, 24}, 2},
    {9, 0, 5, 2, 4, {367, 338, 18}, 1}, {9, 0, 2, 1, 2, {152, 145, 6}, 0},
};

inline const std::vector<Expected>& table(int number) {
    static const std::vector<const std::vector<Expected>*> all{&table1, &table2, &table3, &table4};
    return *all.at(static_cast<std::size_t>(number - 1));
}

// Record curve y^8 = (x+1)^3 (x^2+x+2)^7 at its first two finite places.
inline const std::vector<std::vector<std::int64_t>> record_pure_gaps{
    {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 9},
    {4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}, {10, 1},
};

} // namespace fixtures
