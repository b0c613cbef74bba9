#include "kummer/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "kummer/closedform.hpp"
#include "kummer/gaps.hpp"
#include "kummer/puregaps.hpp"

namespace kummer {

namespace {

std::string describe(const KummerCurve& c) {
    std::ostringstream os;
    os << "curve m=" << c.m() << " lambdas=[";
    for (std::size_t i = 0; i < c.lambdas().size(); ++i) os << (i ? "," : "") << c.lambdas()[i];
    os << "]";
    return os.str();
}

std::string describe(std::span<const Int> tuple) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
    os << ")";
    return os.str();
}

// Outcome of one check family on one unit of work.
struct Partial {
    std::uint64_t checks = 0;
    std::uint64_t mismatches = 0;
    std::optional<std::string> first;

    void record(bool agree, const std::function<std::string()>& what) {
        ++checks;
        if (agree) return;
        ++mismatches;
        if (!first) first = what();
    }
};

// Runs fn(i) for i in [0, count) on up to `threads` workers; results keep
// index order.
std::vector<Partial> parallel_map(std::size_t count, unsigned threads, const std::function<Partial(std::size_t)>& fn) {
    std::vector<Partial> out(count);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
        });
    workers.clear();
    return out;
}

void merge(VerifyReport& report, const std::string& name, const std::vector<Partial>& parts) {
    CheckCount total{name, 0, 0};
    for (const Partial& p : parts) {
        total.checks += p.checks;
        total.mismatches += p.mismatches;
        if (p.first && !report.first_counterexample) report.first_counterexample = name + ": " + *p.first;
    }
    report.counts.push_back(total);
}

// Calls f(tuple) for every tuple in [lo, hi]^width.
template <typename F>
void for_each_tuple(std::size_t width, Int lo, Int hi, F&& f) {
    GapTuple t(width, lo);
    while (true) {
        f(t);
        std::size_t i = width;
        while (i > 0) {
            --i;
            if (t[i] < hi) {
                ++t[i];
                break;
            }
            t[i] = lo;
            if (i == 0) return;
        }
    }
}

Partial criterion_vs_oracle(const KummerCurve& c, const VerifyConfig& cfg) {
    Partial out;
    for (const PlaceSelection& sel : ordered_selections(c, static_cast<std::size_t>(cfg.max_s + 1))) {
        const FloorSumKernel k(c, sel);
        for_each_tuple(sel.size(), 0, 2 * c.m(), [&](const GapTuple& t) {
            bool fast = true;
            for (std::size_t v = 0; v < k.width() && fast; ++v)
                fast = k.criterion_value(t, v) <= (cfg.inject_fault ? 0 : -1);
            const bool slow = is_pure_gap_oracle(k, t);
            out.record(fast == slow, [&] {
                return describe(c) + " places=" + sel.to_string() + " tuple=" + describe(t) +
                       " criterion=" + (fast ? "pure" : "not pure") + " oracle=" + (slow ? "pure" : "not pure");
            });
        });
    }
    return out;
}

Partial gap_count(const KummerCurve& c) {
    Partial out;
    for (PlaceRef p : c.totally_ramified_places()) {
        const GapSet fast = gap_set(c, p);
        const GapSet scan = gap_set_by_scan(c, p);
        out.record(static_cast<Int>(fast.size()) == c.genus() && fast.members == scan.members, [&] {
            return describe(c) + " place=" + p.token() + " |G|=" + std::to_string(fast.size()) +
                   " scan=" + std::to_string(scan.size()) + " genus=" + std::to_string(c.genus());
        });
    }
    return out;
}

Partial reconstruction(const KummerCurve& c, const VerifyConfig& cfg) {
    Partial out;
    if (c.genus() > cfg.max_scan_genus) return out;
    for (const PlaceSelection& sel : ordered_selections(c, static_cast<std::size_t>(cfg.max_s + 1))) {
        const BottomSet fast = bottom_pure_gaps(c, sel);
        const BottomSet naive = bottom_pure_gaps_naive(c, sel);
        out.record(fast.tuples == naive.tuples && fast.caps == naive.caps, [&] {
            return describe(c) + " places=" + sel.to_string() + " bottom set " + std::to_string(fast.size()) +
                   " tuples, naive " + std::to_string(naive.size());
        });

        const std::vector<GapTuple> expanded = expand_bottom_set(fast, c.m());
        std::vector<GapTuple> scanned;
        if (c.genus() > 0) {
            const FloorSumKernel k(c, sel);
            for_each_tuple(sel.size(), 1, 2 * c.genus() - 1, [&](const GapTuple& t) {
                if (is_pure_gap_oracle(k, t)) scanned.push_back(t);
            });
        }
        out.record(expanded == scanned, [&] {
            return describe(c) + " places=" + sel.to_string() + " expansion " + std::to_string(expanded.size()) +
                   " tuples, oracle scan " + std::to_string(scanned.size());
        });
    }
    return out;
}

struct ClosedFormCase {
    Int m, r;
};

Partial closed_forms(const ClosedFormCase& cs, const VerifyConfig& cfg) {
    Partial out;
    const Int m = cs.m, r = cs.r;
    std::vector<Int> lambdas{1, -1};
    for (Int l = 2;; ++l)
        if (std::gcd(l, m) == 1) {
            lambdas.push_back(l);
            break;
        }
    const Int max_places = cfg.max_s + 1;
    for (Int lambda : lambdas) {
        const KummerCurve c(m, std::vector<Int>(static_cast<std::size_t>(r), lambda));
        auto compare = [&](const std::string& form, const PlaceSelection& sel, const std::vector<GapTuple>& closed) {
            const std::vector<GapTuple> engine = full_pure_gap_set(c, sel);
            out.record(engine == closed, [&] {
                return form + " " + describe(c) + " places=" + sel.to_string() + " closed form " +
                       std::to_string(closed.size()) + " tuples, engine " + std::to_string(engine.size());
            });
        };
        for (Int s = 2; s <= std::min(r, max_places); ++s)
            compare("finite", PlaceSelection::finite_range(static_cast<int>(s)), pure_gaps_finite(m, r, s));
        for (Int s = 1; s <= std::min(r, max_places - 1); ++s) {
            const PlaceSelection sel = PlaceSelection::infinity_then_finite(static_cast<int>(s));
            if ((r + 1) % m == 0) compare("infinity-v", sel, pure_gaps_with_infinity_v(m, r, s));
            compare("infinity-general", sel, pure_gaps_with_infinity_general(m, r, s));
        }
    }
    return out;
}

} // namespace

std::vector<KummerCurve> sample_curves(const VerifyConfig& cfg) {
    if (cfg.max_m < 2 || cfg.max_r < 1 || cfg.max_lambda < 1 || cfg.max_s < 0)
        throw Error(Errc::precondition, "verify bounds need max-m >= 2, max-r >= 1, max-lambda >= 1, max-s >= 0");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<Int> pick_m(2, cfg.max_m), pick_r(1, cfg.max_r),
        pick_l(-cfg.max_lambda, cfg.max_lambda - 1);
    std::vector<KummerCurve> out;
    while (static_cast<int>(out.size()) < cfg.curves) {
        const Int m = pick_m(rng);
        std::vector<Int> lambdas(static_cast<std::size_t>(pick_r(rng)));
        for (Int& l : lambdas) {
            l = pick_l(rng);
            if (l >= 0) ++l; // skip zero
        }
        try {
            out.emplace_back(m, std::move(lambdas));
        } catch (const Error&) {
            // not a degree-m extension; draw again
        }
    }
    return out;
}

std::vector<PlaceSelection> ordered_selections(const KummerCurve& c, std::size_t max_size) {
    const std::vector<PlaceRef> places = c.totally_ramified_places();
    std::vector<PlaceSelection> out;
    std::vector<PlaceRef> current;
    std::vector<bool> used(places.size(), false);
    auto rec = [&](auto&& self) -> void {
        if (!current.empty()) out.emplace_back(current);
        if (current.size() == max_size) return;
        for (std::size_t i = 0; i < places.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            current.push_back(places[i]);
            self(self);
            current.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
    return out;
}

VerifyReport run_verification(const VerifyConfig& cfg) {
    const std::vector<KummerCurve> curves = sample_curves(cfg);
    VerifyReport report;
    const unsigned threads = std::max(1u, cfg.threads);

    merge(report, "criterion-vs-oracle",
          parallel_map(curves.size(), threads, [&](std::size_t i) { return criterion_vs_oracle(curves[i], cfg); }));
    merge(report, "gap-count-vs-genus",
          parallel_map(curves.size(), threads, [&](std::size_t i) { return gap_count(curves[i]); }));
    merge(report, "bottom-set-reconstruction",
          parallel_map(curves.size(), threads, [&](std::size_t i) { return reconstruction(curves[i], cfg); }));

    std::vector<ClosedFormCase> cases;
    for (Int m = 2; m <= cfg.max_m; ++m)
        for (Int r = 1; r <= cfg.max_r; ++r)
            if (std::gcd(m, r) == 1) cases.push_back({m, r});
    merge(report, "closed-form-vs-engine",
          parallel_map(cases.size(), threads, [&](std::size_t i) { return closed_forms(cases[i], cfg); }));
    return report;
}

} // namespace kummer
