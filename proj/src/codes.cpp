#include "kummer/codes.hpp"

#include <numeric>
#include <string>

#include "kummer/puregaps.hpp"

namespace kummer {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::precondition, what);
}

bool is_prime_power(Int q) {
    if (q < 2) return false;
    Int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return true; // q itself is prime
    while (q % p == 0) q /= p;
    return q == 1;
}

Int power(Int base, Int exp) {
    Int out = 1;
    for (Int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

constexpr Int max_family_places = Int{1} << 16;

KummerCurve equal_curve(Int m, Int r, Int lambda) {
    require(r >= 1 && r <= max_family_places, "family has too many branch places");
    return KummerCurve(m, std::vector<Int>(static_cast<std::size_t>(r), lambda));
}

// Shape shared by the three constructions: equal multiplicities and every
// branch place (Infinity included) totally ramified.
Int equal_shape_r(const CurveFamilyInstance& fam) {
    const KummerCurve& c = fam.curve;
    require(c.equal_multiplicities(), "constructions need equal multiplicities");
    require(c.is_totally_ramified(PlaceRef::infinity()) && c.is_totally_ramified(PlaceRef::finite(1)),
            "constructions need gcd(r*lambda, m) = 1");
    return c.r();
}

CodeDesign finish(const CurveFamilyInstance& fam, PlaceSelection sel, std::vector<Int> coeffs,
                  Int gain, std::optional<Int> n_opt) {
    const Int s = static_cast<Int>(sel.size());
    const Int g = fam.genus;
    const Int deg = std::accumulate(coeffs.begin(), coeffs.end(), Int{0});
    const Int n = n_opt.value_or(fam.n_rational - s);
    if (!(2 * g - 2 < deg))
        throw Error(Errc::window_violation,
                    "deg G = " + std::to_string(deg) + " must exceed 2g - 2 = " + std::to_string(2 * g - 2));
    if (!(deg < n))
        throw Error(Errc::window_violation,
                    "deg G = " + std::to_string(deg) + " must be below n = " + std::to_string(n));
    if (!(n <= fam.n_rational - s))
        throw Error(Errc::window_violation, "n = " + std::to_string(n) + " exceeds N - s = " +
                                                std::to_string(fam.n_rational - s));
    return CodeDesign{fam, std::move(sel), std::move(coeffs), deg, n, n + g - 1 - deg, deg - (2 * g - 2) + gain};
}

} // namespace

std::string family_name(FamilyId id) {
    switch (id) {
    case FamilyId::f1: return "f1";
    case FamilyId::hq: return "hq";
    case FamilyId::f3: return "f3";
    case FamilyId::custom: return "custom";
    }
    return "?";
}

FamilyId parse_family(const std::string& name) {
    for (FamilyId id : {FamilyId::f1, FamilyId::hq, FamilyId::f3, FamilyId::custom})
        if (family_name(id) == name) return id;
    throw Error(Errc::precondition, "unknown family '" + name + "' (expected f1, hq, f3 or custom)");
}

CurveFamilyInstance catalog(FamilyId id, const FamilyParams& p) {
    switch (id) {
    case FamilyId::f1: {
        require(is_prime_power(p.q), "f1 needs a prime power q");
        require(p.t >= 2 && p.t % 2 == 0, "f1 needs an even t >= 2");
        require(p.m >= 2, "f1 needs m >= 2");
        const Int half = power(p.q, p.t / 2);
        const Int full = checked_mul(half, half);
        require((full - 1) % p.m == 0, "f1 needs m | q^t - 1");
        require(std::gcd(p.m, half - 1) == 1, "f1 needs gcd(m, q^(t/2) - 1) = 1");
        KummerCurve c = equal_curve(p.m, half, half - 1);
        const Int n = checked_add(checked_mul(full - half, p.m), half + 1);
        const Int g = c.genus();
        return {id, std::move(c), g, n, p.q, p.t,
                "f1(q=" + std::to_string(p.q) + ",t=" + std::to_string(p.t) + ",m=" + std::to_string(p.m) + ")",
                {}};
    }
    case FamilyId::hq: {
        require(is_prime_power(p.q), "hq needs a prime power q");
        require(p.m >= 2 && (p.q + 1) % p.m == 0, "hq needs m >= 2 with m | q + 1");
        KummerCurve c = equal_curve(p.m, p.q, 1);
        const Int n = checked_add(checked_mul(p.q, checked_add(1, checked_mul(p.q - 1, p.m))), 1);
        const Int g = c.genus();
        return {id, std::move(c), g, n, p.q, std::nullopt,
                "hq(q=" + std::to_string(p.q) + ",m=" + std::to_string(p.m) + ")", {}};
    }
    case FamilyId::f3: {
        require(p.q >= 4 && (p.q & (p.q - 1)) == 0, "f3 needs q = 2^t with q >= 4");
        require(p.m == 0 || p.m == p.q + 1, "f3 fixes m = q + 1");
        Int t = 0;
        for (Int v = p.q; v > 1; v >>= 1) ++t;
        KummerCurve c = equal_curve(p.q + 1, p.q / 2, 1);
        const Int g = c.genus();
        const Int n = checked_add(1 + checked_mul(p.q, p.q), checked_mul(2 * g, p.q));
        const Int alt = p.q * (p.q - 2) / 2;
        std::vector<std::string> notes;
        if (alt != g)
            notes.push_back("genus " + std::to_string(g) + " from the Kummer formula is used for N; q(q-2)/2 = " +
                            std::to_string(alt) + " disagrees");
        return {id, std::move(c), g, n, p.q, t, "f3(q=" + std::to_string(p.q) + ")", std::move(notes)};
    }
    case FamilyId::custom: {
        require(p.n_rational > 0, "custom family needs N > 0");
        KummerCurve c(p.m, p.lambdas);
        const Int g = c.genus();
        std::string label = "custom(m=" + std::to_string(p.m) + ",lambdas=";
        for (std::size_t i = 0; i < p.lambdas.size(); ++i)
            label += (i ? "," : "") + std::to_string(p.lambdas[i]);
        label += ",N=" + std::to_string(p.n_rational) + ")";
        return {id, std::move(c), g, p.n_rational, std::nullopt, std::nullopt, std::move(label), {}};
    }
    }
    throw Error(Errc::precondition, "unknown family");
}

CodeDesign code_from_box(const CurveFamilyInstance& fam, const PureGapBox& box, Int n, BoxCheck check) {
    if (box.lower.size() != box.selection.size() || box.upper.size() != box.selection.size())
        throw Error(Errc::invalid_box, "box width does not match its selection");
    box.selection.validate_for(fam.curve);
    Int spread = 0;
    std::vector<Int> coeffs;
    for (std::size_t i = 0; i < box.width(); ++i) {
        if (box.lower[i] < 1 || box.lower[i] > box.upper[i])
            throw Error(Errc::invalid_box, "box needs 1 <= lower <= upper");
        coeffs.push_back(box.lower[i] + box.upper[i] - 1);
        spread += box.upper[i] - box.lower[i];
    }
    if (check != BoxCheck::none) {
        const FloorSumKernel kernel(fam.curve, box.selection);
        kernel.check_tuple(box.upper);
        for (const GapTuple& p : box.points()) {
            const bool pure = check == BoxCheck::oracle ? is_pure_gap_oracle(kernel, p) : is_pure_gap(kernel, p);
            if (!pure) {
                std::string t;
                for (std::size_t i = 0; i < p.size(); ++i) t += (i ? "," : "") + std::to_string(p[i]);
                throw Error(Errc::invalid_box, "box point (" + t + ") is not a pure gap");
            }
        }
    }
    const Int s = static_cast<Int>(box.width());
    return finish(fam, box.selection, std::move(coeffs), s + spread, n);
}

CodeDesign construction1(const CurveFamilyInstance& fam, Int s, Int k, std::optional<Int> n) {
    const Int r = equal_shape_r(fam);
    const Int m = fam.curve.m();
    const Int b = r - floor_div(r, m);
    require(s >= 2 && s <= b - 1, "construction 1 needs 2 <= s <= r - floor(r/m) - 1");
    require(k >= 0 && k <= b - 1 - s, "construction 1 needs 0 <= k <= r - floor(r/m) - 1 - s");
    std::vector<Int> coeffs{(2 * k + 1) * m - ceil_div((k + 1) * m, r)};
    Int gain = m - ceil_div((k + 1) * m, r);
    for (Int i = 2; i <= s; ++i) {
        const Int t = m - ceil_div((k + i) * m, r);
        coeffs.push_back(t);
        gain += t;
    }
    return finish(fam, PlaceSelection::finite_range(static_cast<int>(s)), std::move(coeffs), gain, n);
}

CodeDesign construction2(const CurveFamilyInstance& fam, Int s, Int k, std::optional<Int> n) {
    const Int r = equal_shape_r(fam);
    const Int m = fam.curve.m();
    require((r + 1) % m == 0, "construction 2 needs m | r + 1");
    const Int v = (r + 1) / m;
    require(s >= 1 && s <= r - 1 - v, "construction 2 needs 1 <= s <= r - v - 1");
    require(k >= 0 && k <= r - v - 1 - s, "construction 2 needs 0 <= k <= r - v - 1 - s");
    std::vector<Int> coeffs{(2 * k + 1) * m - ceil_div((k + 1) * m, r)};
    Int gain = m - ceil_div((k + 1) * m, r);
    for (Int i = 1; i <= s; ++i) {
        const Int t = m - ceil_div((k + i + 1) * m, r);
        coeffs.push_back(t);
        gain += t;
    }
    return finish(fam, PlaceSelection::infinity_then_finite(static_cast<int>(s)), std::move(coeffs), gain, n);
}

CodeDesign construction3(const CurveFamilyInstance& fam, Int s, Int c, std::optional<Int> n) {
    const Int r = equal_shape_r(fam);
    const Int m = fam.curve.m();
    require((m - 1) % r == 0, "construction 3 needs r | m - 1");
    const Int u = (m - 1) / r;
    require(s >= 1 && s <= r - 2, "construction 3 needs 1 <= s <= r - 2");
    require(c >= 0 && c <= u * (r - s - 1) - 1, "construction 3 needs 0 <= c <= u(r-s-1) - 1");
    std::vector<Int> coeffs{(2 * c + 2) * r - s - 3};
    for (Int i = 1; i <= s; ++i) coeffs.push_back(u * (r - i) - c - 1);
    const Int gain = 1 + (u * r - c) * s - s * (s + 1) * u / 2;
    return finish(fam, PlaceSelection::infinity_then_finite(static_cast<int>(s)), std::move(coeffs), gain, n);
}

std::vector<TableSpec> table_specs(int number) {
    struct Base {
        Int q, t, m, s, k;
        int gain;
    };
    static const Base f1_rows[] = {{8, 2, 9, 2, 5, 3}, {8, 2, 9, 3, 4, 2}, {8, 2, 3, 2, 3, 1},
                                   {9, 2, 5, 2, 5, 2}, {9, 2, 5, 3, 4, 1}, {5, 2, 3, 2, 1, 0}};
    static const Base hq_rows[] = {{5, 0, 6, 2, 2, 1}, {7, 0, 8, 2, 4, 3}, {7, 0, 4, 2, 3, 1},
                                   {8, 0, 9, 2, 5, 3}, {8, 0, 3, 2, 3, 1}, {9, 0, 5, 2, 5, 2},
                                   {9, 0, 5, 3, 4, 1}, {9, 0, 2, 2, 2, 0}};
    std::vector<TableSpec> out;
    switch (number) {
    case 1:
    case 2:
        // The second table moves one finite place to Infinity.
        for (const Base& b : f1_rows)
            out.push_back({number, FamilyId::f1, number, b.q, b.t, b.m, number == 1 ? b.s : b.s - 1, b.k, b.gain});
        return out;
    case 3:
    case 4:
        for (const Base& b : hq_rows)
            out.push_back(
                {number, FamilyId::hq, number - 2, b.q, std::nullopt, b.m, number == 3 ? b.s : b.s - 1, b.k, b.gain});
        return out;
    default:
        throw Error(Errc::precondition, "table number must be 1, 2, 3 or 4");
    }
}

std::vector<TableRow> reproduce_table(int number) {
    std::vector<TableRow> out;
    for (const TableSpec& spec : table_specs(number)) {
        TableRow row{spec, std::nullopt, {}};
        try {
            const CurveFamilyInstance fam = catalog(spec.family, {spec.q, spec.t.value_or(0), spec.m, {}, 0});
            row.design = spec.construction == 1 ? construction1(fam, spec.s, spec.k_or_c)
                                                : construction2(fam, spec.s, spec.k_or_c);
        } catch (const Error& e) {
            row.error = e.what();
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<TableRow> reproduce_tables() {
    std::vector<TableRow> out;
    for (int t = 1; t <= 4; ++t) {
        auto rows = reproduce_table(t);
        out.insert(out.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
    }
    return out;
}

} // namespace kummer
