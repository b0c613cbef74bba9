#include "kummer/puregaps.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "kummer/gaps.hpp"

namespace kummer {

namespace {

void sort_unique(std::vector<GapTuple>& tuples) {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

// Runs fn(begin, end, out) over `count` items split into contiguous chunks and
// concatenates the per-chunk outputs in chunk order.
template <typename Fn>
std::vector<GapTuple> chunked(std::size_t count, unsigned threads, Fn fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads <= 1) {
        std::vector<GapTuple> out;
        fn(std::size_t{0}, count, out);
        return out;
    }
    std::vector<std::vector<GapTuple>> parts(threads);
    {
        std::vector<std::jthread> workers;
        const std::size_t step = (count + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            const std::size_t lo = std::min(count, w * step);
            const std::size_t hi = std::min(count, lo + step);
            workers.emplace_back([&, lo, hi, w] { fn(lo, hi, parts[w]); });
        }
    }
    std::vector<GapTuple> out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

// One extension step: bottom set at sel.prefix(width-1) -> bottom set at
// sel.prefix(width).
std::vector<GapTuple> extend_bottom(const FloorSumKernel& k, const std::vector<GapTuple>& previous,
                                    unsigned threads) {
    const std::size_t last = k.width() - 1;
    const Int m = k.m();
    const Int inv = k.inverses()[last];
    const auto selected = k.selected();

    return chunked(previous.size(), threads, [&](std::size_t lo, std::size_t hi, std::vector<GapTuple>& out) {
        GapTuple candidate(k.width());
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const GapTuple& prefix = previous[idx];
            std::copy(prefix.begin(), prefix.end(), candidate.begin());
            for (Int a = 1; a <= m - 1; ++a) {
                candidate[last] = a;
                if (k.criterion_value(candidate, last) <= -1) {
                    out.push_back(candidate);
                    continue;
                }
                // Once the criterion fails at a shift shared with an earlier
                // coordinate, no larger a can pass.
                bool congruent = false;
                for (std::size_t i = 0; i < last && !congruent; ++i)
                    congruent = mod(prefix[i] - a * inv * selected[i], m) == 0;
                if (congruent) break;
            }
        }
    });
}

void expand_into(const GapTuple& base, Int cap, Int m, std::vector<GapTuple>& out) {
    GapTuple current = base;
    // depth-first over shift vectors with sum <= cap
    auto rec = [&](auto&& self, std::size_t pos, Int budget) -> void {
        if (pos == current.size()) {
            out.push_back(current);
            return;
        }
        for (Int k = 0; k <= budget; ++k) {
            current[pos] = base[pos] + k * m;
            self(self, pos + 1, budget - k);
        }
        current[pos] = base[pos];
    };
    rec(rec, 0, cap);
}

BottomSet with_caps(const FloorSumKernel& k, const PlaceSelection& sel, std::vector<GapTuple> tuples) {
    sort_unique(tuples);
    BottomSet out{sel, std::move(tuples), {}};
    out.caps.reserve(out.tuples.size());
    for (const GapTuple& t : out.tuples) {
        Int worst = std::numeric_limits<Int>::min();
        for (std::size_t v = 0; v < k.width(); ++v) worst = std::max(worst, k.criterion_value(t, v));
        out.caps.push_back(-1 - worst);
    }
    return out;
}

} // namespace

EnumerationOptions default_enumeration_options() {
    EnumerationOptions opts;
    if (const char* env = std::getenv("KUMMER_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0 && n <= 256) opts.threads = static_cast<unsigned>(n);
    }
    return opts;
}

bool is_pure_gap_oracle(const KummerCurve& c, const PlaceSelection& sel, std::span<const Int> tuple) {
    const FloorSumKernel k(c, sel);
    k.check_tuple(tuple);
    return is_pure_gap_oracle(k, tuple);
}

bool is_pure_gap(const KummerCurve& c, const PlaceSelection& sel, std::span<const Int> tuple) {
    const FloorSumKernel k(c, sel);
    k.check_tuple(tuple);
    return is_pure_gap(k, tuple);
}

bool is_pure_gap_oracle(const FloorSumKernel& k, std::span<const Int> tuple) noexcept {
    const Int m = k.m();
    const auto selected = k.selected();
    for (Int t = 0; t < m; ++t) {
        if (k.value(tuple, t) < 0) continue;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            const Int x = tuple[i] + t * selected[i];
            if (floor_div(x, m) != floor_div(x - 1, m)) return false;
        }
    }
    return true;
}

bool is_pure_gap(const FloorSumKernel& k, std::span<const Int> tuple) noexcept {
    for (std::size_t v = 0; v < k.width(); ++v)
        if (k.criterion_value(tuple, v) > -1) return false;
    return true;
}

BottomSet bottom_pure_gaps(const KummerCurve& c, const PlaceSelection& sel, const EnumerationOptions& opts) {
    sel.validate_for(c);
    std::vector<GapTuple> current;
    for (const BottomGap& b : bottom_gaps(c, sel[0])) current.push_back({b.value});
    for (std::size_t width = 2; width <= sel.size() && !current.empty(); ++width) {
        const FloorSumKernel k(c, sel.prefix(width));
        current = extend_bottom(k, current, opts.threads);
    }
    return with_caps(FloorSumKernel(c, sel), sel, std::move(current));
}

BottomSet bottom_pure_gaps_naive(const KummerCurve& c, const PlaceSelection& sel) {
    sel.validate_for(c);
    std::vector<GapTuple> current;
    for (Int a = 1; a <= c.m() - 1; ++a)
        if (is_pure_gap(c, sel.prefix(1), std::vector<Int>{a})) current.push_back({a});
    for (std::size_t width = 2; width <= sel.size(); ++width) {
        const PlaceSelection prefix = sel.prefix(width);
        std::vector<GapTuple> next;
        for (const GapTuple& t : current) {
            GapTuple candidate = t;
            candidate.push_back(0);
            for (Int a = 1; a <= c.m() - 1; ++a) {
                candidate.back() = a;
                if (is_pure_gap(c, prefix, candidate)) next.push_back(candidate);
            }
        }
        current = std::move(next);
    }
    return with_caps(FloorSumKernel(c, sel), sel, std::move(current));
}

Int expansion_cap(const KummerCurve& c, const PlaceSelection& sel, std::span<const Int> bottom_tuple) {
    const FloorSumKernel k(c, sel);
    k.check_tuple(bottom_tuple);
    for (Int a : bottom_tuple)
        if (a < 1 || a > c.m() - 1)
            throw Error(Errc::precondition, "bottom tuple coordinates must lie in [1, m-1]");
    Int worst = std::numeric_limits<Int>::min();
    for (std::size_t v = 0; v < k.width(); ++v) worst = std::max(worst, k.criterion_value(bottom_tuple, v));
    if (worst > -1) throw Error(Errc::precondition, "tuple is not a pure gap");
    return -1 - worst;
}

std::vector<GapTuple> expand_bottom_set(const BottomSet& bottom, Int m) {
    std::vector<GapTuple> out;
    for (std::size_t i = 0; i < bottom.tuples.size(); ++i) expand_into(bottom.tuples[i], bottom.caps[i], m, out);
    sort_unique(out);
    return out;
}

std::vector<GapTuple> full_pure_gap_set(const KummerCurve& c, const PlaceSelection& sel,
                                        const EnumerationOptions& opts) {
    return expand_bottom_set(bottom_pure_gaps(c, sel, opts), c.m());
}

bool extend_pure_gap(const KummerCurve& c, const PlaceSelection& sel, std::span<const Int> known_prefix,
                     Int extension, bool check_hypothesis) {
    if (sel.size() < 2)
        throw Error(Errc::invalid_selection, "extension needs at least two places");
    const FloorSumKernel k(c, sel);
    if (known_prefix.size() + 1 != sel.size())
        throw Error(Errc::length_mismatch, "prefix must have one coordinate fewer than the selection");
    if (extension < 1 || extension > c.m() - 1)
        throw Error(Errc::precondition, "extension coordinate must lie in [1, m-1]");

    GapTuple full(known_prefix.begin(), known_prefix.end());
    full.push_back(extension);
    k.check_tuple(full);

    if (check_hypothesis) {
        bool holds;
        if (extension == 1) {
            holds = is_pure_gap(c, sel.prefix(sel.size() - 1), known_prefix);
        } else {
            GapTuple previous = full;
            previous.back() = extension - 1;
            holds = is_pure_gap(c, sel, previous);
        }
        if (!holds)
            throw Error(Errc::precondition, extension == 1
                                                ? "prefix is not a pure gap at the shorter selection"
                                                : "predecessor tuple is not a pure gap");
    }
    return k.criterion_value(full, sel.size() - 1) <= -1;
}

ProjectedGap project_pure_gap(const KummerCurve& c, const PlaceSelection& sel, std::span<const Int> tuple,
                              std::span<const std::size_t> indices) {
    if (!is_pure_gap(c, sel, tuple)) throw Error(Errc::precondition, "tuple is not a pure gap");
    ProjectedGap out{sel.project(indices), {}};
    for (std::size_t i : indices) out.tuple.push_back(tuple[i]);
    return out;
}

} // namespace kummer
