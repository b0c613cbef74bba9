#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "kummer/arith.hpp"

namespace kummer {

/// A branch place of the Kummer extension: the place over the pole of x
/// (Infinity, index 0) or the place over the zero of x - alpha_i (Finite(i),
/// 1 <= i <= r).
class PlaceRef {
public:
    static constexpr PlaceRef infinity() noexcept { return PlaceRef(0); }
    static PlaceRef finite(int i);

    constexpr bool is_infinity() const noexcept { return index_ == 0; }
    /// 0 for Infinity, i for Finite(i).
    constexpr int index() const noexcept { return index_; }

    /// "inf" or the decimal index.
    std::string token() const;
    static PlaceRef parse(const std::string& token);

    friend constexpr bool operator==(PlaceRef, PlaceRef) noexcept = default;
    friend constexpr auto operator<=>(PlaceRef, PlaceRef) noexcept = default;

private:
    constexpr explicit PlaceRef(int index) noexcept : index_(index) {}
    int index_;
};

/// The function field y^m = prod_{i=1}^r (x - alpha_i)^{lambda_i}.
///
/// Only the exponent and the multiplicities are stored. The roots alpha_i are
/// assumed pairwise distinct; nothing computed here depends on their values.
class KummerCurve {
public:
    /// Throws Errc::invalid_curve when m < 2, the list is empty, a
    /// multiplicity is zero, or gcd(m, lambda_1, ..., lambda_r) != 1 (the
    /// equation would not define a degree-m extension). Throws Errc::overflow
    /// when products of the size used by the gap criteria could leave 64 bits.
    KummerCurve(Int m, std::vector<Int> lambdas);

    Int m() const noexcept { return m_; }
    int r() const noexcept { return static_cast<int>(lambdas_.size()); }
    std::span<const Int> lambdas() const noexcept { return lambdas_; }
    Int lambda0() const noexcept { return lambda0_; }

    /// lambda_0 for Infinity, lambda_i for Finite(i).
    Int multiplicity(PlaceRef p) const;
    /// All r+1 multiplicities, lambda_0 first.
    std::vector<Int> all_multiplicities() const;

    bool has_place(PlaceRef p) const noexcept { return p.index() <= r(); }
    bool is_totally_ramified(PlaceRef p) const;
    /// Totally ramified places in index order (Infinity first).
    std::vector<PlaceRef> totally_ramified_places() const;

    Int genus() const noexcept { return genus_; }

    /// True when every lambda_i is equal.
    bool equal_multiplicities() const noexcept;

    friend bool operator==(const KummerCurve&, const KummerCurve&) = default;

private:
    Int m_;
    std::vector<Int> lambdas_;
    Int lambda0_;
    Int genus_;
};

inline KummerCurve new_curve(Int m, std::vector<Int> lambdas) {
    return KummerCurve(m, std::move(lambdas));
}

inline Int genus(const KummerCurve& c) noexcept { return c.genus(); }

/// Ordered list of distinct branch places.
class PlaceSelection {
public:
    /// Throws Errc::invalid_selection for an empty list or repeated places.
    explicit PlaceSelection(std::vector<PlaceRef> places);
    PlaceSelection(std::initializer_list<PlaceRef> places)
        : PlaceSelection(std::vector<PlaceRef>(places)) {}

    /// Throws Errc::invalid_place when a place does not exist on `c` or is not
    /// totally ramified there.
    void validate_for(const KummerCurve& c) const;

    std::size_t size() const noexcept { return places_.size(); }
    PlaceRef operator[](std::size_t i) const { return places_[i]; }
    std::span<const PlaceRef> places() const noexcept { return places_; }
    auto begin() const noexcept { return places_.begin(); }
    auto end() const noexcept { return places_.end(); }

    bool contains(PlaceRef p) const noexcept;

    /// Selection made of the entries at `indices` (positions into this one).
    PlaceSelection project(std::span<const std::size_t> indices) const;
    /// First `n` entries.
    PlaceSelection prefix(std::size_t n) const;

    /// Q_1, ..., Q_s.
    static PlaceSelection finite_range(int s);
    /// Q_inf, Q_1, ..., Q_s.
    static PlaceSelection infinity_then_finite(int s);

    std::string to_string() const;

    friend bool operator==(const PlaceSelection&, const PlaceSelection&) = default;

private:
    std::vector<PlaceRef> places_;
};

/// (s+1)-tuple of non-negative integers aligned with a PlaceSelection.
using GapTuple = std::vector<Int>;

/// Precomputed view of a curve seen from an ordered selection of totally
/// ramified places: selected multiplicities, their inverses modulo m, and the
/// multiplicities of every place left out (lambda_0 included when Infinity is
/// not selected).
class FloorSumKernel {
public:
    FloorSumKernel(const KummerCurve& c, const PlaceSelection& sel);

    Int m() const noexcept { return m_; }
    std::size_t width() const noexcept { return selected_.size(); }
    std::span<const Int> selected() const noexcept { return selected_; }
    std::span<const Int> rest() const noexcept { return rest_; }
    std::span<const Int> inverses() const noexcept { return sigma_; }

    /// sum_i floor((a_i + t*l_i)/m) over the selection plus
    /// sum floor(t*l/m) over the remaining multiplicities.
    /// Requires 0 <= t < m and |a_i| <= max_coordinate.
    Int value(std::span<const Int> tuple, Int t) const noexcept {
        Int acc = 0;
        for (std::size_t i = 0; i < selected_.size(); ++i)
            acc += floor_div(tuple[i] + t * selected_[i], m_);
        for (Int l : rest_) acc += floor_div(t * l, m_);
        return acc;
    }

    /// Residue t = -a*sigma_v (mod m): the one shift at which coordinate v
    /// crosses a multiple of m.
    Int critical_shift(Int a, std::size_t v) const noexcept { return mod(-a * sigma_[v], m_); }

    /// Left-hand side of the pure-gap criterion for index v.
    Int criterion_value(std::span<const Int> tuple, std::size_t v) const noexcept {
        return value(tuple, critical_shift(tuple[v], v));
    }

    /// Throws Errc::length_mismatch / Errc::precondition on a tuple the
    /// kernel cannot evaluate.
    void check_tuple(std::span<const Int> tuple) const;

    static constexpr Int max_coordinate = Int{1} << 40;

private:
    Int m_;
    std::vector<Int> selected_;
    std::vector<Int> rest_;
    std::vector<Int> sigma_;
};

/// Exact floor sum for an arbitrary integer shift t; see FloorSumKernel::value.
Int floor_sum(const KummerCurve& c, const PlaceSelection& sel, std::span<const Int> tuple, Int t);

} // namespace kummer
