#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kummer/curve.hpp"

namespace kummer {

/// Bounds for the equivalence harness. Curves are drawn at random with
/// 2 <= m <= max_m, 1 <= r <= max_r and 1 <= |lambda_i| <= max_lambda;
/// selections have at most max_s + 1 places.
struct VerifyConfig {
    Int max_m = 9;
    Int max_r = 6;
    Int max_s = 2;
    Int max_lambda = 9;
    int curves = 200;
    std::uint64_t seed = 1;
    /// Genus bound for the [1, 2g-1]^{s+1} reconstruction scan.
    Int max_scan_genus = 12;
    /// Replaces the criterion threshold -1 by 0 so that the harness has
    /// something to catch.
    bool inject_fault = false;
    unsigned threads = 1;
};

struct CheckCount {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t mismatches = 0;
};

struct VerifyReport {
    std::vector<CheckCount> counts;
    /// Description of the first mismatch found, in check order.
    std::optional<std::string> first_counterexample;

    bool ok() const noexcept { return !first_counterexample.has_value(); }
};

/// Random curve sample used by the harness, reproducible from the seed.
std::vector<KummerCurve> sample_curves(const VerifyConfig& cfg);

/// Every ordered selection of distinct totally ramified places with
/// 1 <= size <= max_size.
std::vector<PlaceSelection> ordered_selections(const KummerCurve& c, std::size_t max_size);

/// Runs, in order: criterion against oracle on [0, 2m]^{s+1}, gap count
/// against genus, bottom-set enumeration against the naive variant and the
/// expansion against an oracle scan, and the closed forms against the engine.
VerifyReport run_verification(const VerifyConfig& cfg);

} // namespace kummer
