#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kummer/closedform.hpp"
#include "kummer/curve.hpp"

namespace kummer {

/// Curve families with a closed-form count N of rational places.
///   f1:     y^m = x^R - x over F_{q^t}, R = q^{t/2}: r = R, lambda = R - 1,
///           N = (q^t - R)m + R + 1; needs m | q^t - 1 and gcd(m, R - 1) = 1.
///   hq:     y^m = x^q + x over F_{q^2}: r = q, lambda = 1,
///           N = q(1 + (q-1)m) + 1; needs m | q + 1.
///   f3:     y^{q+1} = sum_i x^{q/2^i} over F_{q^2}, q = 2^t: m = q + 1,
///           r = q/2, lambda = 1, N = 1 + q^2 + 2gq.
///   custom: any curve; N supplied by the caller.
enum class FamilyId { f1, hq, f3, custom };

std::string family_name(FamilyId id);
/// Throws Errc::precondition on an unknown name.
FamilyId parse_family(const std::string& name);

struct FamilyParams {
    Int q = 0;
    Int t = 0;
    Int m = 0;
    std::vector<Int> lambdas; // custom only
    Int n_rational = 0;       // custom only
};

struct CurveFamilyInstance {
    FamilyId family;
    KummerCurve curve;
    Int genus;
    Int n_rational;
    std::optional<Int> q;
    std::optional<Int> t;
    std::string label;
    std::vector<std::string> notes;
};

/// Throws Errc::precondition when the family constraints fail.
CurveFamilyInstance catalog(FamilyId id, const FamilyParams& params);

/// Parameters of the residue code C(D, G) with G = sum g_coeffs[i] * Q_i over
/// the selected places and D the sum of n other rational places.
struct CodeDesign {
    CurveFamilyInstance family;
    PlaceSelection selection;
    std::vector<Int> g_coeffs;
    Int deg_g;
    Int n;
    Int k_dim;
    Int d_lower;
};

enum class BoxCheck { none, criterion, oracle };

/// Code from a box [a, b] of pure gaps: G = sum (a_i + b_i - 1) Q_i,
/// k = n + g - 1 - deg G, d >= deg G - (2g - 2) + s + sum (b_i - a_i), where s
/// is the number of places in the box. Throws Errc::window_violation unless
/// 2g - 2 < deg G < n <= N - s, Errc::invalid_box when a lattice point fails
/// the selected check.
CodeDesign code_from_box(const CurveFamilyInstance& fam, const PureGapBox& box, Int n,
                         BoxCheck check = BoxCheck::criterion);

/// Finite places Q_1..Q_s, parameter k; n defaults to N - s.
CodeDesign construction1(const CurveFamilyInstance& fam, Int s, Int k, std::optional<Int> n = {});
/// Q_inf and Q_1..Q_s for m | r + 1, parameter k; n defaults to N - s - 1.
CodeDesign construction2(const CurveFamilyInstance& fam, Int s, Int k, std::optional<Int> n = {});
/// Q_inf and Q_1..Q_s for r | m - 1, parameter c; n defaults to N - s - 1.
CodeDesign construction3(const CurveFamilyInstance& fam, Int s, Int c, std::optional<Int> n = {});

/// One stored table row: a family, a construction and its parameters.
struct TableSpec {
    int table;
    FamilyId family;
    int construction;
    Int q;
    std::optional<Int> t;
    Int m;
    Int s;
    Int k_or_c;
    /// Reported distance gain over a reference table. Stored as is, never
    /// recomputed.
    int reported_improvement;
};

struct TableRow {
    TableSpec spec;
    std::optional<CodeDesign> design;
    std::string error; // set when design is empty
};

/// Row parameters of table `number` (1 to 4). Throws Errc::precondition
/// otherwise.
std::vector<TableSpec> table_specs(int number);

/// Computes every row of table `number`. Rows whose parameters are rejected
/// carry the error text instead of a design.
std::vector<TableRow> reproduce_table(int number);

/// Tables 1 to 4 in order.
std::vector<TableRow> reproduce_tables();

} // namespace kummer
